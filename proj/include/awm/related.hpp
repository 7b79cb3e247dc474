#pragma once

#include <functional>
#include <string>
#include <vector>

#include "awm/arith.hpp"
#include "awm/oracle.hpp"
#include "awm/report.hpp"

namespace awm {

constexpr long kRelatedCap = 10;  // q-Laguerre, JV, JV-Rubey, the T_k identity
constexpr long kEulerCap = 6;
constexpr long kZengCap = 5;

enum class Family { QLaguerre, JV, JVRubey, TQEuler };
const char* family_name(Family f);

// Each formula returns the n-th moment of `spec`, so it can be compared with
// moment_table directly.  For JV that is (1-q)^n Z_n, not Z_n.
struct ConnectionFamily {
  Family tag;
  RecurrenceSpec spec;
  std::vector<std::pair<std::string, std::function<RatFunc(long)>>> formulas;
  long cap;
};
ConnectionFamily connection_family(Family f);
std::vector<ConnectionFamily> connection_families();

// q-Laguerre moments: y in slot y
RatFunc nu_corteel(long n);
RatFunc nu_williams(long n);
// (1-q)^n * Williams sum = Corteel numerator, compared as Laurent polynomials in y, q
VerificationReport laguerre_equivalence_check(long n);

// JV's partition function Z_n(a,b,y,q), both forms include the 1/(1-q)^n
RatFunc jv_zn(long n);
RatFunc jv_zn_derived(long n);

// R_n(a,b,c,d;q) in the rescaled double-sum form
RatFunc jvr_moment(long n);

// (t,q)-Euler numbers, t in slot t
MPoly euler_t_k(long k);  // T_k(t,q)
RatFunc euler_kim(long n);
RatFunc euler_prop(long n);
RatFunc euler_zeng(long n);
VerificationReport euler_tk_identity_check(long k);

// rescaling: nu_n, Z_n and R_n rebuilt from two-parameter Askey-Wilson
// moments, with y = t^2 (resp. c = t^2) to avoid square roots
VerificationReport rescaling_check(long N);

VerificationReport family_check(const ConnectionFamily& f, long N);
VerificationReport related_checks(long n_nu, long n_jv, long n_euler, long k3, long n_resc);

}  // namespace awm
