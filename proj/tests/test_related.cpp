#include <gtest/gtest.h>

#include "awm/oracle.hpp"
#include "awm/qcalc.hpp"
#include "awm/related.hpp"

using namespace awm;

namespace {

RatFunc R(int v) { return RatFunc::var(v); }

void expect_all_pass(const VerificationReport& rep) {
  for (const auto& c : rep.checks) EXPECT_EQ(c.status, Status::Pass) << c.name << " " << c.detail;
  EXPECT_FALSE(rep.checks.empty());
}

}  // namespace

TEST(Related, QLaguerre) {
  EXPECT_TRUE(ratfunc_equal(nu_corteel(0), RatFunc(1)));
  // nu_1 = b_0 = [0]_q + y[1]_q
  EXPECT_TRUE(ratfunc_equal(nu_corteel(1), R(VY)));
  EXPECT_FALSE(ratfunc_equal(nu_corteel(1), RatFunc(1) + R(VY) * (RatFunc(1) + R(VQ))));
  auto mt = moment_table(q_laguerre_spec(), 8);
  for (long n = 0; n <= 8; ++n) {
    EXPECT_TRUE(ratfunc_equal(nu_corteel(n), mt.moments[n])) << n;
    EXPECT_TRUE(ratfunc_equal(nu_williams(n), mt.moments[n])) << n;
    expect_all_pass(laguerre_equivalence_check(n));
  }
  EXPECT_THROW(nu_corteel(kRelatedCap + 1), std::invalid_argument);
}

TEST(Related, JV) {
  EXPECT_TRUE(ratfunc_equal(jv_zn(0), RatFunc(1)));
  RatFunc one_q = RatFunc(1) - R(VQ);
  EXPECT_TRUE(ratfunc_equal(one_q * jv_zn(1), RatFunc(1) + R(VY) + R(VA) + R(VB) * R(VY)));
  auto mt = moment_table(jv_spec(), 6);
  for (long n = 0; n <= 6; ++n) {
    EXPECT_TRUE(ratfunc_equal(jv_zn(n), jv_zn_derived(n))) << n;
    EXPECT_TRUE(ratfunc_equal(one_q.pow(n) * jv_zn(n), mt.moments[n])) << n;
  }
}

TEST(Related, JVRubey) {
  EXPECT_TRUE(ratfunc_equal(jvr_moment(0), RatFunc(1)));
  EXPECT_TRUE(ratfunc_equal(jvr_moment(1), R(VD) + R(VA) + R(VB)));
  auto mt = moment_table(jv_rubey_spec(), 6);
  for (long n = 0; n <= 6; ++n) EXPECT_TRUE(ratfunc_equal(jvr_moment(n), mt.moments[n])) << n;
}

TEST(Related, TQEuler) {
  EXPECT_TRUE(ratfunc_equal(euler_kim(0), RatFunc(1)));
  RatFunc e1 = (RatFunc(1) - R(VT) * R(VQ)) / (RatFunc(1) - R(VQ));
  auto mt = moment_table(tq_euler_spec(), 5);
  EXPECT_TRUE(ratfunc_equal(mt.moments[1], e1));
  for (long n = 0; n <= 4; ++n) {
    EXPECT_TRUE(ratfunc_equal(euler_kim(n), mt.moments[n])) << n;
    EXPECT_TRUE(ratfunc_equal(euler_prop(n), mt.moments[n])) << n;
    EXPECT_TRUE(ratfunc_equal(euler_zeng(n), mt.moments[n])) << n;
  }
  for (long k = 0; k <= 8; ++k) expect_all_pass(euler_tk_identity_check(k));
  EXPECT_THROW(euler_zeng(kZengCap + 1), std::invalid_argument);
}

TEST(Related, Rescaling) { expect_all_pass(rescaling_check(6)); }

TEST(Related, Families) {
  auto fams = connection_families();
  ASSERT_EQ(fams.size(), 4u);
  EXPECT_EQ(fams[3].formulas.size(), 3u);
  expect_all_pass(related_checks(4, 3, 3, 4, 3));
}
