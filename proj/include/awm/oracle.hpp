#pragma once

#include <functional>
#include <string>
#include <vector>

#include "awm/arith.hpp"

namespace awm {

struct RecurrenceSpec {
  std::string name;
  std::function<RatFunc(long)> b;       // n >= 0
  std::function<RatFunc(long)> lambda;  // n >= 1
  std::vector<int> variables;
};

struct MomentTable {
  std::string spec_name;
  std::vector<RatFunc> moments;
};

// The four parameters and the base, each an arbitrary RatFunc.
struct AWParams {
  RatFunc a = RatFunc::var(VA), b = RatFunc::var(VB), c = RatFunc::var(VC), d = RatFunc::var(VD);
  RatFunc q = RatFunc::var(VQ);
};

RatFunc aw_A(long n, const AWParams& p = {});
RatFunc aw_C(long n, const AWParams& p = {});
// (b_n, lambda_n); lambda_0 is returned as 0
std::pair<RatFunc, RatFunc> aw_coefficients(long n, const AWParams& p = {});

// scale s multiplies b_n by s and lambda_n by s^2, so the moments pick up s^n
RecurrenceSpec aw_spec(const AWParams& p = {}, long scale = 1);
RecurrenceSpec q_laguerre_spec();
RecurrenceSpec jv_spec();
RecurrenceSpec jv_rubey_spec();
RecurrenceSpec tq_euler_spec();
RecurrenceSpec aw_symmetric_rescaled_spec();
RecurrenceSpec named_spec(const std::string& name);  // throws std::invalid_argument
std::vector<std::string> spec_names();

MomentTable moment_table(const RecurrenceSpec& spec, long N, bool reduce = true);
// mu_0..mu_N of the Askey-Wilson weight at the given parameters
std::vector<RatFunc> aw_moments(const AWParams& p, long N);

MomentTable rescale_moments(const MomentTable& mu, const RatFunc& c, const RatFunc& d);

// Independent check: monic orthogonal polynomials from the recurrence at a
// numeric point, then moments from L(p_n) = 0.
std::vector<GaussRat> hankel_moments(const RecurrenceSpec& spec, long N, const Point& pt);

}  // namespace awm
