#include <gtest/gtest.h>

#include "awm/closed_forms.hpp"
#include "awm/lattice.hpp"
#include "awm/oracle.hpp"

using namespace awm;

namespace {

MPoly P(int v) { return MPoly::var(v); }

MPoly sum_weights(const std::vector<MotzkinPath>& ps) {
  MPoly s;
  for (const auto& p : ps) s += path_weight(p);
  return s;
}

using SK = StepKind;
using WT = WeightTag;

MotzkinPath example_path() {
  return MotzkinPath{{{SK::Up, 1, WT::MinusOne},
                      {SK::Up, 2, WT::ABQPow},
                      {SK::Up, 3, WT::ABQPow},
                      {SK::Down, 3, WT::MinusOne},
                      {SK::Horizontal, 2, WT::BQPow},
                      {SK::Up, 3, WT::MinusOne},
                      {SK::Horizontal, 3, WT::AQPow},
                      {SK::Down, 3, WT::MinusOne},
                      {SK::Down, 2, WT::MinusOne},
                      {SK::Horizontal, 1, WT::BQPow},
                      {SK::Down, 1, WT::QPow}}};
}

}  // namespace

TEST(Motzkin, SmallSums) {
  auto p0 = enumerate_motzkin(0, false);
  ASSERT_EQ(p0.size(), 1u);
  EXPECT_EQ(path_weight(p0[0]), MPoly(1));
  auto p1 = enumerate_motzkin(1, false);
  EXPECT_EQ(p1.size(), 2u);
  EXPECT_EQ(sum_weights(p1), P(VA) + P(VB));
  MPoly expect = P(VA) * P(VA) + P(VA) * P(VB) * (MPoly(1) + P(VQ)) + P(VB) * P(VB) - P(VQ);
  EXPECT_EQ(sum_weights(enumerate_motzkin(2, true)), expect);
  EXPECT_EQ(motzkin_sum(2, true), expect);
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(sum_weights(enumerate_motzkin(n, false)), motzkin_sum(n, false)) << n;
    EXPECT_EQ(sum_weights(enumerate_motzkin(n, true)), motzkin_sum(n, true)) << n;
    for (const auto& p : enumerate_motzkin(n, true)) ASSERT_TRUE(p.valid() && p.restricted());
  }
  EXPECT_THROW(enumerate_motzkin(15, false), std::invalid_argument);
}

TEST(Motzkin, OracleAndPenaud) {
  AWParams p;
  p.c = RatFunc(0);
  p.d = RatFunc(0);
  auto mu = aw_moments(p, 10);
  for (int n = 0; n <= 10; ++n) {
    EXPECT_TRUE(ratfunc_equal(motzkin_moment(n), mu[n] * RatFunc(1L << n))) << n;
    EXPECT_TRUE(penaud_check(n).ok()) << n;
  }
}

TEST(DSS, Examples) {
  auto e = enumerate_dss(0, 0);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_TRUE(ratfunc_equal(dss_weight(e[0]), RatFunc(1)));
  MPoly s;
  for (int i = 0; i <= 2; ++i)
    for (const auto& x : enumerate_dss(i, 2 - i)) s += dss_weight(x).to_polynomial();
  EXPECT_EQ(s, P(VA) * P(VA) + P(VA) * P(VB) * (MPoly(1) + P(VQ)) + P(VB) * P(VB) - P(VQ));

  DssConstraint c;
  c.lambda = std::vector<int>{3, 2, 2};
  c.mu = std::vector<int>{0, 0, 0};
  c.white = std::vector<Stripe>{};
  c.black = std::vector<Stripe>{};
  auto one = enumerate_dss(3, 4, c);
  ASSERT_EQ(one.size(), 1u);
  MPoly w = MPoly::monomial([] {
    Mono m;
    m.e[VA] = 3;
    m.e[VB] = 4;
    m.e[VQ] = 7;
    return m;
  }());
  EXPECT_EQ(dss_weight(one[0]).to_polynomial(), w);
  EXPECT_THROW(enumerate_dss(5, 5), std::invalid_argument);
}

TEST(DSS, ValidationRejectsBadStripes) {
  // white stripe that does not reach the bottom edge
  EXPECT_THROW(DSShape(2, 2, {2, 2}, {0, 0}, {{{1, 1}}}, {}), std::logic_error);
  // black stripe that does not start at the top edge
  EXPECT_THROW(DSShape(2, 2, {2, 2}, {0, 0}, {}, {{{2, 2}}}), std::logic_error);
  // not diagonal
  EXPECT_THROW(DSShape(2, 2, {2, 2}, {0, 0}, {{{1, 1}, {2, 1}}}, {}), std::logic_error);
  EXPECT_NO_THROW(DSShape(2, 2, {2, 2}, {0, 0}, {{{1, 1}, {2, 2}}}, {}));
  // same cells white and black
  EXPECT_THROW(DSShape(1, 1, {1}, {0}, {{{1, 1}}}, {{{1, 1}}}), std::logic_error);
}

TEST(DSS, RhoExample) {
  MotzkinPath p = example_path();
  ASSERT_TRUE(p.valid() && p.restricted());
  DSShape expect(5, 6, {6, 5, 5, 5, 3}, {2, 2, 0, 0, 0}, {{{5, 1}}, {{2, 3}, {3, 4}, {4, 5}}},
                 {{{1, 4}, {2, 5}}, {{3, 1}, {4, 2}, {5, 3}}, {{1, 3}, {2, 4}, {3, 5}}});
  DSShape got = rho(p);
  EXPECT_EQ(got, expect) << got.str();
  EXPECT_EQ(dss_weight(got).to_polynomial(), path_weight(p));
  EXPECT_EQ(rho_inverse(got), p);
  EXPECT_EQ(rho(MotzkinPath{}), DSShape(0, 0, {}, {}, {}, {}));
  MotzkinPath peak{{{SK::Up, 1, WT::MinusOne}, {SK::Down, 1, WT::MinusOne}}};
  EXPECT_THROW(rho(peak), std::invalid_argument);
}

TEST(DSS, KimExample) {
  std::vector<int> lam{6, 6, 5, 5, 3};
  DSShape a(5, 6, lam, {3, 2, 2, 0, 0}, {}, {{{2, 3}, {3, 4}, {4, 5}}, {{1, 5}, {2, 6}}});
  DSShape a2(5, 6, lam, {3, 3, 3, 1, 0}, {}, {{{1, 5}, {2, 6}}});
  EXPECT_EQ(kim_involution(a), a2);
  EXPECT_EQ(kim_involution(a2), a);
  DSShape b(5, 6, lam, {3, 1, 1, 1, 0}, {}, {{{2, 3}, {3, 4}, {4, 5}}, {{1, 5}, {2, 6}}});
  DSShape b2(5, 6, lam, {3, 2, 2, 2, 0}, {}, {{{1, 5}, {2, 6}}});
  EXPECT_EQ(kim_involution(b), b2);
  EXPECT_EQ(kim_involution(b2), b);
  DSShape fixed(5, 6, lam, {0, 0, 0, 0, 0}, {}, {});
  EXPECT_EQ(kim_involution(fixed), fixed);
}

TEST(DSS, ExtendedExample) {
  DSShape s(5, 6, {6, 6, 5, 5, 3}, {3, 1, 0, 0, 0},
            {{{2, 2}, {3, 3}, {4, 4}}, {{3, 1}, {4, 2}, {5, 3}}, {{4, 1}, {5, 2}}},
            {{{1, 5}, {2, 6}}, {{2, 3}, {3, 4}, {4, 5}}});
  DSShape t(5, 6, {6, 6, 5, 5, 1}, {3, 2, 1, 1, 0}, {{{2, 3}, {3, 4}, {4, 5}}, {{3, 2}, {4, 3}}, {{4, 2}}},
            {{{1, 5}, {2, 6}}});
  EXPECT_EQ(extended_involution(s), t) << extended_involution(s).str();
  EXPECT_EQ(extended_involution(t), s);
  EXPECT_TRUE(ratfunc_equal(dss_weight(t), -dss_weight(s)));
  EXPECT_THROW(kim_involution(s), std::invalid_argument);
}

TEST(DSS, WordExample) {
  DSShape s(8, 9, {8, 8, 6, 5, 5, 3, 3, 2}, std::vector<int>(8, 0),
            {{{7, 1}, {8, 2}}, {{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}}, {{2, 1}, {3, 2}, {4, 3}, {5, 4}}}, {});
  std::string w = dss_to_word(s);
  EXPECT_EQ(w, "20210002022112");
  EXPECT_EQ(s.cells() - s.white_dots(), word_inversions(w) + 3);
  EXPECT_EQ(dss_rotate(DSShape(0, 0, {}, {}, {}, {})), DSShape(0, 0, {}, {}, {}, {}));
  EXPECT_THROW(dss_to_word(DSShape(1, 1, {1}, {1}, {}, {})), std::invalid_argument);
}

TEST(Matchings, Examples) {
  EXPECT_EQ(p_poly(3, 1), MPoly(2) + P(VQ));
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(p_poly(n, n), MPoly(1));
  EXPECT_TRUE(p_poly(4, 1).is_zero());
  EXPECT_EQ(enumerate_matchings(4).size(), 10u);
  EXPECT_EQ(enumerate_matchings(6, 0).size(), 15u);
  Matching pi{3, {0, 3, 2, 1}};  // {1,3},{2}
  EXPECT_EQ(crossing(pi), 1);
  EXPECT_EQ(cm_genfunc(0, 1, 1, 0, 0), MPoly(1));
  EXPECT_EQ(cm_genfunc(2, 0, 0, 0, 0), MPoly(1));
  EXPECT_TRUE(cm_genfunc(1, 0, 0, 0, 0).is_zero());
  EXPECT_TRUE(cm_genfunc(0, 2, 0, 0, 0).is_zero());
  EXPECT_THROW(enumerate_matchings(13), std::invalid_argument);
}

TEST(Lattice, ExhaustiveChecks) {
  VerificationReport rep = lattice_checks(10, 8, 7, 10);
  for (const auto& c : rep.checks)
    EXPECT_EQ(c.status, Status::Pass) << c.name << " " << c.detail;
  EXPECT_TRUE(rep.ok());
}
