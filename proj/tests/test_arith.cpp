#include <gtest/gtest.h>

#include "awm/arith.hpp"

using namespace awm;

namespace {
RatFunc v(int x, int p = 1) { return RatFunc::var(x, p); }
MPoly pv(int x, int p = 1) { return MPoly::var(x, p); }
}  // namespace

TEST(GaussRat, FieldOps) {
  GaussRat a = GaussRat::parse("1/2", "3"), b = GaussRat::parse("-2", "1/3");
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a * a.inverse(), GaussRat(1));
  EXPECT_EQ(GaussRat::I().pow(2), GaussRat(-1));
  EXPECT_EQ(GaussRat::I().pow(-3), GaussRat::I());
  EXPECT_THROW(GaussRat(0).inverse(), std::domain_error);
  EXPECT_EQ(GaussRat::parse("6/4").str(), "3/2");
}

TEST(MPoly, Products) {
  MPoly a = pv(VA), b = pv(VB), q = pv(VQ);
  EXPECT_EQ((a + b) * (a - b), a * a - b * b);
  EXPECT_EQ((MPoly(1) - q) * (MPoly(1) + q + q * q), MPoly(1) - q.pow(3));
  EXPECT_EQ(pv(VQ, -1) * q, MPoly(1));
  EXPECT_TRUE(((a + b) - (a + b)).is_zero());
  EXPECT_EQ((MPoly(1) + q).pow(3).coeff_sum(), GaussRat(8));
}

TEST(MPoly, CanonicalOrder) {
  MPoly p = pv(VA) + pv(VAA) + pv(VQ, 2) + MPoly(1);
  // total degree first, then A before the other variables
  EXPECT_EQ(p.terms()[0].first, Mono::var(VQ, 2));
  EXPECT_EQ(p.terms()[1].first, Mono::var(VAA));
  EXPECT_EQ(p.str(), "1 + a + A + q^2");
}

TEST(MPoly, ExactDivision) {
  MPoly q = pv(VQ), a = pv(VA);
  MPoly n = (MPoly(1) - q * q) * (MPoly(1) - a * q);
  auto d = n.exact_div(MPoly(1) - q);
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, (MPoly(1) + q) * (MPoly(1) - a * q));
  EXPECT_FALSE(n.exact_div(MPoly(1) - a).has_value());
  // Laurent numerator
  auto e = (n * pv(VQ, -3)).exact_div(MPoly(1) + q);
  ASSERT_TRUE(e);
  EXPECT_EQ(*e, (MPoly(1) - q) * (MPoly(1) - a * q) * pv(VQ, -3));
}

TEST(Mono, ExponentOverflow) {
  EXPECT_THROW(Mono::var(VQ, 1000).pow(2000), std::overflow_error);
  EXPECT_NO_THROW(Mono::var(VQ, 1000).pow(1000));
}

TEST(RatFunc, ArithmeticAndReduction) {
  RatFunc q = v(VQ);
  RatFunc r = (RatFunc(1) - q * q) / (RatFunc(1) - q);
  EXPECT_TRUE(ratfunc_equal(r, RatFunc(1) + q));
  EXPECT_EQ(r.to_polynomial(), MPoly(1) + pv(VQ));
  RatFunc s = RatFunc(1) / (RatFunc(1) - q) + RatFunc(1) / (RatFunc(1) + q);
  EXPECT_TRUE(ratfunc_equal(s, RatFunc(2) / (RatFunc(1) - q * q)));
  EXPECT_THROW(s.to_polynomial(), std::domain_error);
  EXPECT_TRUE(ratfunc_equal(q.inverse() * q, RatFunc(1)));
  EXPECT_THROW(RatFunc(1) / RatFunc(0), std::domain_error);
}

TEST(RatFunc, Substitution) {
  RatFunc a = v(VA), b = v(VB), q = v(VQ);
  RatFunc f = RatFunc(1) / (RatFunc(1) - a * b);
  EXPECT_THROW(f.substitute({{VB, a.inverse()}}), std::domain_error);
  RatFunc g = (a + b * b) / (RatFunc(1) - a * q);
  RatFunc h = g.substitute({{VA, (RatFunc(1) + q) / (RatFunc(1) - q)}, {VB, q.inverse()}});
  RatFunc expect = ((RatFunc(1) + q) / (RatFunc(1) - q) + q.pow(-2)) /
                   (RatFunc(1) - q * (RatFunc(1) + q) / (RatFunc(1) - q));
  EXPECT_TRUE(ratfunc_equal(h, expect));
  Point pt{{VQ, GaussRat(mpq_class(1, 3))}};
  EXPECT_EQ(h.eval(pt), expect.eval(pt));
  // negative powers of a bound variable
  RatFunc k = (a.pow(-2) + a) .substitute({{VA, RatFunc(1) - q}});
  EXPECT_TRUE(ratfunc_equal(k, (RatFunc(1) - q).pow(-2) + RatFunc(1) - q));
  EXPECT_THROW(a.inverse().substitute({{VA, RatFunc(0)}}), std::domain_error);
  // simultaneous, not sequential
  RatFunc sw = (a * a * b).substitute({{VA, b}, {VB, a}});
  EXPECT_TRUE(ratfunc_equal(sw, b * b * a));
  EXPECT_TRUE(ratfunc_equal((a * b).substitute({{VB, q / a}}), q));
}

TEST(RatFunc, SumAndFactors) {
  RatFunc q = v(VQ);
  RatSum s;
  for (int k = 0; k < 5; ++k) s.add(q.pow(k) * (RatFunc(1) - q));
  EXPECT_TRUE(ratfunc_equal(s.total(), RatFunc(1) - q.pow(5)));
  Factors f;
  f.mul(MPoly(1) + pv(VQ)).mul(MPoly(1) - pv(VQ)).div(MPoly(1) - pv(VQ)).div(MPoly(2) * pv(VQ));
  RatFunc r = f.build();
  EXPECT_TRUE(r.is_polynomial());
  EXPECT_TRUE(ratfunc_equal(r, (RatFunc(1) + q) / (RatFunc(2) * q)));
}

TEST(RatFunc, JsonRoundTrip) {
  RatFunc q = v(VQ), y = v(VY);
  RatFunc r = (y + GaussRat::parse("1/2", "-1") * q) / (RatFunc(1) - y * q);
  auto j = to_json(r);
  EXPECT_TRUE(ratfunc_equal(ratfunc_from_json(j), r));
  EXPECT_EQ(j["den"].size(), 2u);
}
