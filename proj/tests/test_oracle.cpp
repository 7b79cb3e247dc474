#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "awm/oracle.hpp"
#include "awm/qcalc.hpp"

using namespace awm;

namespace {

const std::vector<RatFunc>& generic(long N) {
  static std::vector<RatFunc> mu = aw_moments(AWParams{}, 6);
  EXPECT_LE(N, 6);
  return mu;
}

Point random_point(std::mt19937& rng, const std::vector<int>& vars) {
  std::uniform_int_distribution<int> num(1, 9), den(10, 29);
  Point pt;
  for (int v : vars) pt[v] = GaussRat(mpq_class(num(rng), den(rng)));
  return pt;
}

}  // namespace

TEST(Oracle, SmallMoments) {
  auto [b0, l0] = aw_coefficients(0);
  auto [b1, l1] = aw_coefficients(1);
  const auto& mu = generic(6);
  EXPECT_TRUE(ratfunc_equal(mu[0], RatFunc(1)));
  EXPECT_TRUE(ratfunc_equal(mu[1], b0));
  EXPECT_TRUE(ratfunc_equal(mu[2], b0 * b0 + l1));
  EXPECT_TRUE(aw_C(0).is_zero());
  RatFunc a = RatFunc::var(VA);
  EXPECT_TRUE(ratfunc_equal(
      b0, (a + a.inverse() - RatFunc::from_factors({MPoly(1) - MPoly::var(VA) * MPoly::var(VB),
                                                      MPoly(1) - MPoly::var(VA) * MPoly::var(VC),
                                                      MPoly(1) - MPoly::var(VA) * MPoly::var(VD)},
                                                     {MPoly::var(VA), MPoly(1) - MPoly::var(VA) *
                                                                          MPoly::var(VB) * MPoly::var(VC) *
                                                                          MPoly::var(VD)})) *
              RatFunc(GaussRat(mpq_class(1, 2)))));
}

TEST(Oracle, AllParametersZero) {
  Bindings zero{{VA, RatFunc()}, {VB, RatFunc()}, {VC, RatFunc()}, {VD, RatFunc()}};
  RatFunc quarter_1mq = RatFunc(GaussRat(mpq_class(1, 4))) * (RatFunc(1) - RatFunc::var(VQ));
  EXPECT_TRUE(ratfunc_equal(aw_coefficients(1).second.substitute(zero), quarter_1mq));
  EXPECT_TRUE(ratfunc_equal(generic(6)[2].substitute(zero), quarter_1mq));
}

TEST(Oracle, MatchesHankelSystem) {
  std::mt19937 rng(7);
  for (const auto& name : spec_names()) {
    RecurrenceSpec s = named_spec(name);
    MomentTable t = moment_table(s, 6);
    for (int trial = 0; trial < 3; ++trial) {
      Point pt = random_point(rng, {VA, VB, VC, VD, VQ, VY, VT});
      auto h = hankel_moments(s, 6, pt);
      for (int n = 0; n <= 6; ++n) EXPECT_EQ(t.moments[n].eval(pt), h[n]) << name << " n=" << n;
    }
  }
}

TEST(Oracle, ScaledMomentsArePolynomials) {
  const auto& mu = generic(6);
  MPoly abcd = MPoly::var(VA) * MPoly::var(VB) * MPoly::var(VC) * MPoly::var(VD);
  for (int n = 0; n <= 6; ++n) {
    RatFunc r = mu[n] * RatFunc(q_pochhammer(abcd, n)) * RatFunc(GaussRat(mpz_class(mpz_class(1) << n)));
    MPoly p = r.to_polynomial();
    for (const auto& [m, c] : p.terms()) {
      ASSERT_TRUE(c.is_integer()) << n;
      ASSERT_TRUE(m.nonneg()) << n;
    }
  }
}

TEST(Oracle, SymmetricInParameters) {
  const auto& mu = generic(6);
  std::array<int, 4> perm{VA, VB, VC, VD};
  do {
    Bindings b;
    for (int i = 0; i < 4; ++i) b[i] = RatFunc::var(perm[i]);
    for (int n = 0; n <= 5; ++n) EXPECT_TRUE(ratfunc_equal(mu[n].substitute(b), mu[n]));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Oracle, Rescaling) {
  MomentTable t = moment_table(jv_spec(), 4);
  MomentTable same = rescale_moments(t, RatFunc(1), RatFunc());
  for (int n = 0; n <= 4; ++n) EXPECT_TRUE(ratfunc_equal(same.moments[n], t.moments[n]));
  MomentTable shifted = rescale_moments(t, RatFunc(1), RatFunc(1));
  EXPECT_TRUE(ratfunc_equal(shifted.moments[1], RatFunc(1) + jv_spec().b(0)));
}

TEST(Oracle, Errors) {
  EXPECT_THROW(named_spec("nope"), std::invalid_argument);
  EXPECT_THROW(moment_table(jv_spec(), -1), std::invalid_argument);
  // abcd = q^{-1} makes lambda_1 singular
  AWParams p;
  p.d = (RatFunc::var(VA) * RatFunc::var(VB) * RatFunc::var(VC) * RatFunc::var(VQ)).inverse();
  EXPECT_THROW(aw_moments(p, 3), std::domain_error);
}
