#include <gtest/gtest.h>

#include "awm/qcalc.hpp"

using namespace awm;

namespace {
MPoly q(int p = 1) { return MPoly::var(VQ, p); }
MPoly one() { return MPoly(1); }
}  // namespace

TEST(QCalc, Examples) {
  EXPECT_EQ(q_int(3), one() + q() + q(2));
  EXPECT_EQ(q_factorial(0), one());
  EXPECT_EQ(q_double_factorial_even(2), (one() + q()) * (one() + q() + q(2) + q(3)));
  EXPECT_EQ(q_pochhammer(MPoly::var(VA), 0), one());
  EXPECT_EQ(q_pochhammer(MPoly::var(VA), 2), (one() - MPoly::var(VA)) * (one() - MPoly::var(VA) * q()));
  EXPECT_EQ(q_pochhammer(q(), 2, QCtx::q2()), (one() - q()) * (one() - q(3)));
  EXPECT_EQ(q_binomial(4, 2), one() + q() + q(2).scaled(2) + q(3) + q(4));
  EXPECT_EQ(q_binomial(7, 0), one());
  EXPECT_EQ(q_multinomial(3, {1, 1, 1}), one() + q().scaled(2) + q(2).scaled(2) + q(3));
  EXPECT_THROW(q_multinomial(3, {1, 1}), std::invalid_argument);
  EXPECT_THROW(q_int(-1), std::invalid_argument);
  EXPECT_THROW(QCtx(MPoly(1)), std::invalid_argument);
}

TEST(QCalc, ExtendedBinomialIsZero) {
  EXPECT_TRUE(q_binomial(3, 4).is_zero());
  EXPECT_TRUE(q_binomial(3, -1).is_zero());
  EXPECT_TRUE(q_binomial(-2, 0).is_zero());
}

TEST(QCalc, SymmetryAndPascal) {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(q_binomial(n, k), q_binomial(n, n - k));
      if (n == 0) continue;
      EXPECT_EQ(q_binomial(n, k), q_binomial(n - 1, k - 1) + q(k) * q_binomial(n - 1, k));
      EXPECT_EQ(q_binomial(n, k), q(n - k) * q_binomial(n - 1, k - 1) + q_binomial(n - 1, k));
    }
}

TEST(QCalc, IntegerFamilies) {
  EXPECT_EQ(ballot_diff(4, 1), 3);
  EXPECT_EQ(ballot_diff(4, 0), 1);
  EXPECT_EQ(ballot_diff_variant(4, 1), 0);
  EXPECT_EQ(catalan_half(3), 5);
  EXPECT_EQ(catalan_half(mpq_class(3, 2)), 0);
  EXPECT_EQ(narayana(4, 2), 6);
  for (int n = 0; n <= 12; ++n) {
    mpz_class s = 0;
    for (int k = 0; k <= n + 1; ++k) {
      s += ballot_diff(n, k);
      EXPECT_GE(s, 0);
    }
    EXPECT_EQ(s, 0);
  }
}

TEST(QCalc, ClassicalIdentities) {
  VerificationReport r = identity_checks(8);
  for (const auto& c : r.checks) EXPECT_EQ(c.status, Status::Pass) << c.name << " " << c.detail;
  EXPECT_GE(r.checks.size(), 19u);
}
