#include "awm/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "awm/closed_forms.hpp"
#include "awm/lattice.hpp"
#include "awm/oracle.hpp"
#include "awm/qcalc.hpp"
#include "awm/related.hpp"
#include "awm/staircase.hpp"

namespace awm {

namespace {

RatFunc R(int v) { return RatFunc::var(v); }
std::string num(long v) { return std::to_string(v); }

long sz(const SuiteOptions& o, long def) { return o.n ? std::min(def, std::max(0L, *o.n)) : def; }

std::vector<RatFunc> oracle(RatFunc a, RatFunc b, RatFunc c, RatFunc d, long N, RatFunc q = R(VQ)) {
  AWParams p;
  p.a = a;
  p.b = b;
  p.c = c;
  p.d = d;
  p.q = q;
  return aw_moments(p, N);
}

// both sides at a fixed point, so a failure carries a concrete witness
std::string witness(const RatFunc& lhs, const RatFunc& rhs) {
  Point pt{{VA, GaussRat(mpq_class(2, 3))}, {VB, GaussRat(mpq_class(3, 5))},  {VC, GaussRat(mpq_class(5, 7))},
           {VD, GaussRat(mpq_class(7, 11))}, {VQ, GaussRat(mpq_class(1, 13))}, {VY, GaussRat(mpq_class(2, 17))},
           {VT, GaussRat(mpq_class(3, 19))}, {VAA, GaussRat(mpq_class(5, 23))}};
  try {
    GaussRat x = lhs.eval(pt), y = rhs.eval(pt);
    if (x != y) return "at (a,b,c,d,q,y,t,A)=(2/3,3/5,5/7,7/11,1/13,2/17,3/19,5/23): formula " + x.str() +
                       ", oracle " + y.str();
  } catch (const std::exception&) {
  }
  return "difference is a nonzero rational function";
}

void eq(VerificationReport& rep, const std::string& suite, const std::string& name, const RatFunc& lhs,
        const RatFunc& rhs) {
  bool ok = ratfunc_equal(lhs, rhs);
  rep.add(suite, name, ok, ok ? "" : witness(lhs, rhs));
}

// first monomial whose coefficient is not a nonnegative integer, or whose
// q exponent is negative
std::string first_negative(const MPoly& p) {
  for (const auto& [m, c] : p.terms())
    if (!c.is_integer() || c.sign_re() < 0 || m.e[VQ] < 0) return "coefficient " + c.str() + " at " + m.str();
  return "";
}

MPoly two_pow(long n) { return MPoly(GaussRat(mpz_class(mpz_class(1) << n))); }

// ---- criterion 1 ----
VerificationReport closed_forms_suite(const SuiteOptions& o) {
  VerificationReport rep;
  const std::string S = "closed-forms";
  const RatFunc a = R(VA), b = R(VB), c = R(VC), q = R(VQ);
  long n4 = sz(o, 5), n3 = sz(o, 6), n2 = sz(o, 10), ns = sz(o, 4), nq = sz(o, 6), na = sz(o, 3);
  auto gen = oracle(a, b, c, R(VD), n4);
  for (long n = 0; n <= n4; ++n) {
    eq(rep, S, "double sum = oracle n=" + num(n), mu_double_sum(n), gen[n]);
    eq(rep, S, "triple sum = oracle n=" + num(n), mu_triple_sum(n), gen[n]);
    eq(rep, S, "matching formula = oracle n=" + num(n), mu_main(n), gen[n]);
    eq(rep, S, "second matching formula = oracle n=" + num(n), mu_main2(n), gen[n]);
  }
  auto d0 = oracle(a, b, c, RatFunc(), n3);
  for (long n = 0; n <= n3; ++n) eq(rep, S, "d=0 formula = oracle n=" + num(n), mu_d0(n), d0[n]);
  auto cd0 = oracle(a, b, RatFunc(), RatFunc(), n2);
  auto bqa = oracle(a, q / a, RatFunc(), RatFunc(), n2);
  auto bna = oracle(a, -a, RatFunc(), RatFunc(), n2);
  for (long n = 0; n <= n2; ++n) {
    eq(rep, S, "c=d=0 formula = oracle n=" + num(n), mu_two_param(TwoParam::CD0, n), cd0[n]);
    eq(rep, S, "b=q/a formula = oracle n=" + num(n), mu_two_param(TwoParam::BQoverA, n), bqa[n]);
    eq(rep, S, "b=-a formula = oracle n=" + num(n), mu_two_param(TwoParam::BnegA, n), bna[n]);
  }
  auto sym = oracle(a, -a, c, -c, 2 * ns);
  for (long n = 0; n <= ns; ++n) {
    eq(rep, S, "(a,-a,c,-c) sum over c,d form = oracle 2n=" + num(2 * n), mu_symmetric(Symm::CDsum, n), sym[2 * n]);
    eq(rep, S, "(a,-a,c,-c) triple form = oracle 2n=" + num(2 * n), mu_symmetric(Symm::Triple, n), sym[2 * n]);
  }
  auto q0 = oracle(a, b, c, R(VD), nq, RatFunc());
  for (long n = 0; n <= nq; ++n) eq(rep, S, "q=0 formula = oracle n=" + num(n), mu_q0(n), q0[n]);
  auto abba = oracle(a, b, -b, -a, 2 * na), abab = oracle(a, b, -a, -b, 2 * na);
  for (long n = 0; n <= na; ++n) {
    eq(rep, S, "(a,b,-b,-a) formula = oracle 2n=" + num(2 * n), mu_antisym(AntiSym::ABBA, n), abba[2 * n]);
    eq(rep, S, "(a,b,-a,-b) formula = oracle 2n=" + num(2 * n), mu_antisym(AntiSym::ABAB, n), abab[2 * n]);
  }
  return rep;
}

// ---- criterion 2 ----
VerificationReport w87_suite(const SuiteOptions& o) {
  VerificationReport rep;
  const std::string S = "8w7";
  long n4 = sz(o, 4), n3 = sz(o, 3);
  auto gen = oracle(R(VA), R(VB), R(VC), R(VD), n4);
  for (long n = 0; n <= n4; ++n) {
    RatFunc f = mu_8w7(ABinding::Free, n);
    eq(rep, S, "8W7 form with free A = triple sum n=" + num(n), f, mu_triple_sum(n));
    eq(rep, S, "8W7 form with free A = oracle n=" + num(n), f, gen[n]);
    auto wt = w87_terms(ABinding::A_is_a, n);
    auto tt = triple_sum_terms(n);
    bool ok = wt.size() == tt.size();
    std::string why;
    for (size_t m = 0; ok && m < wt.size(); ++m)
      if (!ratfunc_equal(wt[m], tt[m])) ok = false, why = "term m=" + num(static_cast<long>(m));
    rep.add(S, "A=a specialization matches term by term n=" + num(n), ok, why);
  }
  auto aq = oracle(R(VA), R(VB), R(VC), R(VD), n3);
  for (long n = 0; n <= n3; ++n)
    eq(rep, S, "q=A^2 form = oracle n=" + num(n), mu_8w7(ABinding::SqrtQ, n),
       aq[n].substitute({{VQ, RatFunc(MPoly::var(VAA, 2))}}));
  return rep;
}

// ---- criterion 6 ----
VerificationReport positivity_suite(const SuiteOptions& o) {
  VerificationReport rep;
  const std::string S = "positivity";
  long n1 = sz(o, 10), n2 = sz(o, 6);
  for (long n = 0; n <= n1; ++n) {
    MPoly p = (mu_two_param(TwoParam::BQoverA, n) * RatFunc(two_pow(n))).to_polynomial();
    std::string bad = first_negative(p);
    rep.add(S, "2^n mu_n(a,q/a,0,0) has nonnegative integer coefficients n=" + num(n), bad.empty(), bad);
  }
  RatFunc a = R(VA), b = R(VB), q = R(VQ);
  auto flip = oracle(a, b, q / a, q / b, n2);
  for (long n = 0; n <= n2; ++n) {
    eq(rep, S, "(a,b,q/a,q/b) formula = oracle n=" + num(n), mu_flip(n), flip[n]);
    MPoly p = (mu_flip(n) * RatFunc(q_factorial(n + 1)) * RatFunc(two_pow(n))).to_polynomial();
    std::string bad = first_negative(p);
    rep.add(S, "[n+1]_q! 2^n mu_n(a,b,q/a,q/b) nonnegative n=" + num(n), bad.empty(), bad);
    GaussRat want(mpz_class(mpz_class(1) << n) * factorial(n + 1));
    rep.add(S, "coefficient sum 2^n (n+1)! n=" + num(n), p.coeff_sum() == want,
            "sum " + p.coeff_sum().str() + ", expected " + want.str());
  }
  return rep;
}

// ---- criterion 3 ----
VerificationReport combinatorics_suite(const SuiteOptions& o) {
  VerificationReport rep;
  rep.merge(motzkin_checks(static_cast<int>(sz(o, 10))));
  rep.merge(dss_checks(static_cast<int>(sz(o, 8))));
  rep.merge(involution_checks(static_cast<int>(sz(o, 7))));
  rep.merge(word_checks(static_cast<int>(sz(o, 6))));
  return rep;
}

using SuiteFn = std::function<VerificationReport(const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"closed-forms", closed_forms_suite},
      {"8w7", w87_suite},
      {"combinatorics", combinatorics_suite},
      {"staircase",
       [](const SuiteOptions& o) {
         return staircase_checks(static_cast<int>(sz(o, 6)), static_cast<int>(sz(o, 6)), 5, o.seed);
       }},
      {"matchings", [](const SuiteOptions& o) { return matching_checks(static_cast<int>(sz(o, 10))); }},
      {"positivity", positivity_suite},
      {"conjectures", scan_conjectures},
      {"related", [](const SuiteOptions& o) { return related_checks(sz(o, 8), sz(o, 6), sz(o, 4), sz(o, 8), sz(o, 6)); }},
      {"identities", [](const SuiteOptions& o) { return identity_checks(static_cast<int>(sz(o, 8))); }},
  };
  return r;
}

const std::map<std::string, SuiteFn>& aliases() {
  static const std::map<std::string, SuiteFn> r = {
      {"involutions", [](const SuiteOptions& o) { return involution_checks(static_cast<int>(sz(o, 7))); }},
      {"motzkin", [](const SuiteOptions& o) { return motzkin_checks(static_cast<int>(sz(o, 10))); }},
      {"words", [](const SuiteOptions& o) { return word_checks(static_cast<int>(sz(o, 6))); }},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

std::vector<std::string> known_suites() {
  std::vector<std::string> out = suite_names();
  out.push_back("all");
  for (const auto& [name, fn] : aliases()) out.push_back(name);
  return out;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "all") {
    VerificationReport rep;
    for (const auto& [n, fn] : registry()) rep.merge(fn(o));
    return rep;
  }
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(o);
  auto it = aliases().find(name);
  if (it != aliases().end()) return it->second(o);
  throw std::invalid_argument("unknown suite: " + name);
}

VerificationReport scan_conjectures(const SuiteOptions& o) {
  VerificationReport rep;
  const std::string S = "conjectures";
  for (long n = 0; n <= sz(o, 5); ++n) {
    std::string tag = " n=" + num(n);
    MPoly t;
    try {
      t = tau_2n(n);
    } catch (const std::domain_error& e) {
      rep.add_conjecture(S, "tau_2n is a polynomial" + tag, false, e.what());
      continue;
    }
    std::string bad = first_negative(t);
    rep.add_conjecture(S, "tau_2n has nonnegative integer coefficients" + tag, bad.empty(), bad);
    Point ones{{VA, GaussRat(1)}, {VC, GaussRat(1)}, {VQ, GaussRat(1)}};
    GaussRat want(mpz_class(mpz_class(1) << (2 * n)) * double_factorial_odd(n));
    rep.add(S, "tau_2n coefficient sum 2^{2n}(2n-1)!!" + tag, t.eval(ones) == want,
            "sum " + t.eval(ones).str() + ", expected " + want.str());
  }
  const RatFunc a = R(VA), b = R(VB), q = R(VQ);
  long nmax = sz(o, 4);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      auto mu = oracle(a, b, q.pow(i) / a, q.pow(j) / b, nmax);
      for (long n = 0; n <= nmax; ++n) {
        std::string tag = " i=" + num(i) + " j=" + num(j) + " n=" + num(n);
        RatFunc f = mu[n] * RatFunc(q_factorial(n + i + j - 1)) * RatFunc(two_pow(n));
        MPoly p;
        try {
          p = f.to_polynomial();
        } catch (const std::domain_error& e) {
          rep.add_conjecture(S, "[n+i+j-1]_q! 2^n mu_n(a,b,q^i/a,q^j/b) is a Laurent polynomial" + tag, false,
                             e.what());
          continue;
        }
        std::string bad = first_negative(p);
        rep.add_conjecture(S, "[n+i+j-1]_q! 2^n mu_n(a,b,q^i/a,q^j/b) nonnegative" + tag, bad.empty(), bad);
      }
    }
  return rep;
}

namespace {

struct FormulaEntry {
  std::function<RatFunc(long)> f;
  long cap;
};

const std::vector<std::pair<std::string, FormulaEntry>>& formulas() {
  static const std::vector<std::pair<std::string, FormulaEntry>> r = {
      {"double-sum", {mu_double_sum, 8}},
      {"triple-sum", {mu_triple_sum, 8}},
      {"main", {mu_main, 8}},
      {"main2", {mu_main2, 8}},
      {"d0", {mu_d0, 10}},
      {"cd0", {[](long n) { return mu_two_param(TwoParam::CD0, n); }, 16}},
      {"bqa", {[](long n) { return mu_two_param(TwoParam::BQoverA, n); }, 16}},
      {"bna", {[](long n) { return mu_two_param(TwoParam::BnegA, n); }, 16}},
      {"symm-cd", {[](long n) { return mu_symmetric(Symm::CDsum, n); }, 6}},
      {"symm-triple", {[](long n) { return mu_symmetric(Symm::Triple, n); }, 6}},
      {"tau", {[](long n) { return RatFunc(tau_2n(n)); }, 6}},
      {"8w7", {[](long n) { return mu_8w7(ABinding::Free, n); }, 5}},
      {"8w7-sqrtq", {[](long n) { return mu_8w7(ABinding::SqrtQ, n); }, 4}},
      {"q0", {mu_q0, 10}},
      {"flip", {mu_flip, 10}},
      {"antisym-abba", {[](long n) { return mu_antisym(AntiSym::ABBA, n); }, 5}},
      {"antisym-abab", {[](long n) { return mu_antisym(AntiSym::ABAB, n); }, 5}},
      {"motzkin", {motzkin_moment, 12}},
      {"corteel", {nu_corteel, kRelatedCap}},
      {"williams", {nu_williams, kRelatedCap}},
      {"jv-zn", {jv_zn, kRelatedCap}},
      {"jv-zn-derived", {jv_zn_derived, kRelatedCap}},
      {"jvr", {jvr_moment, kRelatedCap}},
      {"euler-kim", {euler_kim, kEulerCap}},
      {"euler-prop", {euler_prop, kEulerCap}},
      {"euler-zeng", {euler_zeng, kZengCap}},
  };
  return r;
}

}  // namespace

std::vector<std::string> formula_names() {
  std::vector<std::string> out;
  for (const auto& [name, e] : formulas()) out.push_back(name);
  return out;
}

RatFunc eval_formula(const std::string& name, long n) {
  for (const auto& [fname, e] : formulas())
    if (fname == name) {
      if (n < 0 || n > e.cap)
        throw std::invalid_argument("formula " + name + ": index must be in 0.." + std::to_string(e.cap));
      return e.f(n);
    }
  throw std::invalid_argument("unknown formula: " + name);
}

}  // namespace awm
