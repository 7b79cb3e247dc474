#include <gtest/gtest.h>

#include "awm/closed_forms.hpp"
#include "awm/oracle.hpp"
#include "awm/qcalc.hpp"

using namespace awm;

namespace {

RatFunc R(int v) { return RatFunc::var(v); }

std::vector<RatFunc> oracle(RatFunc a, RatFunc b, RatFunc c, RatFunc d, long N, RatFunc q = R(VQ)) {
  AWParams p;
  p.a = a;
  p.b = b;
  p.c = c;
  p.d = d;
  p.q = q;
  return aw_moments(p, N);
}

const std::vector<RatFunc>& generic() {
  static auto mu = oracle(R(VA), R(VB), R(VC), R(VD), 5);
  return mu;
}

}  // namespace

TEST(ClosedForms, FourParameterSums) {
  const auto& mu = generic();
  for (long n = 0; n <= 5; ++n) {
    EXPECT_TRUE(ratfunc_equal(mu_double_sum(n), mu[n])) << n;
    EXPECT_TRUE(ratfunc_equal(mu_triple_sum(n), mu[n])) << n;
    EXPECT_TRUE(ratfunc_equal(mu_main(n), mu[n])) << n;
    EXPECT_TRUE(ratfunc_equal(mu_main2(n), mu[n])) << n;
  }
}

TEST(ClosedForms, DZero) {
  auto mu = oracle(R(VA), R(VB), R(VC), RatFunc(), 6);
  for (long n = 0; n <= 6; ++n) {
    EXPECT_TRUE(ratfunc_equal(mu_d0(n), mu[n])) << n;
    MPoly p = (mu_d0(n) * RatFunc(GaussRat(mpz_class(mpz_class(1) << n)))).to_polynomial();
    for (const auto& [m, c] : p.terms()) EXPECT_TRUE(c.is_integer() && m.nonneg());
  }
}

TEST(ClosedForms, TwoParameter) {
  RatFunc a = R(VA), b = R(VB), q = R(VQ);
  auto cd0 = oracle(a, b, RatFunc(), RatFunc(), 10);
  auto bqa = oracle(a, q / a, RatFunc(), RatFunc(), 10);
  auto bna = oracle(a, -a, RatFunc(), RatFunc(), 10);
  for (long n = 0; n <= 10; ++n) {
    EXPECT_TRUE(ratfunc_equal(mu_two_param(TwoParam::CD0, n), cd0[n])) << n;
    EXPECT_TRUE(ratfunc_equal(mu_two_param(TwoParam::BQoverA, n), bqa[n])) << n;
    EXPECT_TRUE(ratfunc_equal(mu_two_param(TwoParam::BnegA, n), bna[n])) << n;
  }
  EXPECT_TRUE(ratfunc_equal(mu_two_param(TwoParam::CD0, 1), (a + b) * RatFunc(GaussRat(mpq_class(1, 2)))));
  EXPECT_TRUE(mu_two_param(TwoParam::BnegA, 3).is_zero());
  EXPECT_TRUE(ratfunc_equal(mu_two_param(TwoParam::BQoverA, 2),
                            mu_two_param(TwoParam::CD0, 2).substitute({{VB, q / a}})));
}

TEST(ClosedForms, BQoverAPositivity) {
  for (long n = 0; n <= 10; ++n) {
    MPoly p = (mu_two_param(TwoParam::BQoverA, n) * RatFunc(GaussRat(mpz_class(mpz_class(1) << n))))
                  .to_polynomial();
    for (const auto& [m, c] : p.terms()) {
      EXPECT_TRUE(c.is_integer() && c.sign_re() > 0);
      EXPECT_GE(m.e[VQ], 0);
    }
  }
}

TEST(ClosedForms, Symmetric) {
  RatFunc a = R(VA), c = R(VC);
  auto mu = oracle(a, -a, c, -c, 8);
  for (long n = 0; n <= 4; ++n) {
    EXPECT_TRUE(ratfunc_equal(mu_symmetric(Symm::CDsum, n), mu[2 * n])) << n;
    EXPECT_TRUE(ratfunc_equal(mu_symmetric(Symm::Triple, n), mu[2 * n])) << n;
    EXPECT_TRUE(mu[2 * n + 1 <= 8 ? 2 * n + 1 : 1].is_zero());
  }
}

TEST(ClosedForms, TauMatchesRescaledSpec) {
  MomentTable nu = moment_table(aw_symmetric_rescaled_spec(), 8);
  EXPECT_EQ(tau_2n(0), MPoly(1));
  for (long n = 0; n <= 4; ++n) {
    MPoly t = tau_2n(n);
    RatFunc viaspec = nu.moments[2 * n] *
                      RatFunc(q_pochhammer(MPoly::var(VQ) * MPoly::var(VA, 2) * MPoly::var(VC, 2), n, QCtx::q2()));
    EXPECT_TRUE(ratfunc_equal(RatFunc(t), viaspec)) << n;
    Point ones{{VA, 1}, {VC, 1}, {VQ, 1}};
    EXPECT_EQ(t.eval(ones), GaussRat(mpz_class(mpz_class(1) << (2 * n)) * double_factorial_odd(n)));
  }
}

TEST(ClosedForms, EightW7) {
  const auto& mu = generic();
  for (long n = 0; n <= 4; ++n) {
    RatFunc f = mu_8w7(ABinding::Free, n);
    EXPECT_TRUE(ratfunc_equal(f, mu_triple_sum(n))) << n;
    auto wt = w87_terms(ABinding::A_is_a, n);
    auto tt = triple_sum_terms(n);
    ASSERT_EQ(wt.size(), tt.size());
    for (size_t m = 0; m < wt.size(); ++m) EXPECT_TRUE(ratfunc_equal(wt[m], tt[m])) << n << " " << m;
  }
  for (long n = 0; n <= 3; ++n) {
    RatFunc target = mu[n].substitute({{VQ, RatFunc(MPoly::var(VAA, 2))}});
    EXPECT_TRUE(ratfunc_equal(mu_8w7(ABinding::SqrtQ, n), target)) << n;
  }
}

TEST(ClosedForms, W87FiniteSumSymmetricAndPolynomialInParameters) {
  const MPoly A = MPoly::var(VAA);
  for (long m = 0; m <= 4; ++m) {
    RatFunc e = w87_finite_sum(m, A).reduced();
    for (const auto& [atom, k] : e.den_atoms())
      for (int v : {VA, VB, VC, VD}) EXPECT_EQ(atom.max_exp(v), 0) << m;
    for (const auto& [mono, c] : e.numerator().terms())
      for (int v : {VA, VB, VC, VD}) EXPECT_GE(mono.e[v], 0);
    EXPECT_TRUE(ratfunc_equal(e.substitute({{VA, R(VB)}, {VB, R(VA)}}), e));
    EXPECT_TRUE(ratfunc_equal(e.substitute({{VA, R(VD)}, {VD, R(VA)}}), e));
    // four-phi-three side
    RatFunc lhs = w87_finite_sum(m, A) / RatFunc(q_pochhammer(A * A, m));
    EXPECT_TRUE(ratfunc_equal(lhs, RatFunc(w87_poly_sum(m, A)))) << m;
  }
}

TEST(ClosedForms, OpBar) {
  EXPECT_EQ(op_bar(2, 0), MPoly(1) - MPoly::var(VQ));
  EXPECT_EQ(op_bar(3, 3), MPoly(1));
  EXPECT_TRUE(op_bar(3, 0).is_zero());
}

TEST(ClosedForms, QZero) {
  auto mu = oracle(R(VA), R(VB), R(VC), R(VD), 6, RatFunc());
  for (long n = 0; n <= 6; ++n) EXPECT_TRUE(ratfunc_equal(mu_q0(n), mu[n])) << n;
  // mu_1 = b_0 carries no q at all
  EXPECT_TRUE(ratfunc_equal(mu_q0(1), aw_coefficients(0).first));
  EXPECT_FALSE(ratfunc_equal(mu_q0(1), (R(VA) + R(VB) + R(VC) + R(VD)) * RatFunc(GaussRat(mpq_class(1, 2)))));
}

TEST(ClosedForms, FlipParameters) {
  RatFunc a = R(VA), b = R(VB), q = R(VQ);
  auto mu = oracle(a, b, q / a, q / b, 6);
  EXPECT_TRUE(ratfunc_equal(mu_flip(0), RatFunc(1)));
  for (long n = 0; n <= 6; ++n) {
    EXPECT_TRUE(ratfunc_equal(mu_flip(n), mu[n])) << n;
    MPoly p = (mu_flip(n) * RatFunc(q_factorial(n + 1)) *
               RatFunc(GaussRat(mpz_class(mpz_class(1) << n))))
                  .to_polynomial();
    for (const auto& [m, c] : p.terms()) EXPECT_TRUE(c.is_integer() && c.sign_re() > 0);
    EXPECT_EQ(p.coeff_sum(), GaussRat(mpz_class(mpz_class(1) << n) * factorial(n + 1)));
  }
}

TEST(ClosedForms, AntiSymmetric) {
  RatFunc a = R(VA), b = R(VB);
  auto abba = oracle(a, b, -b, -a, 6);
  auto abab = oracle(a, b, -a, -b, 6);
  for (long n = 0; n <= 3; ++n) {
    EXPECT_TRUE(ratfunc_equal(mu_antisym(AntiSym::ABBA, n), abba[2 * n])) << n;
    EXPECT_TRUE(ratfunc_equal(mu_antisym(AntiSym::ABAB, n), abab[2 * n])) << n;
  }
  EXPECT_TRUE(abba[3].is_zero());
}
