#include "awm/related.hpp"

#include <mutex>
#include <stdexcept>

#include "awm/qcalc.hpp"

namespace awm {

namespace {

void check_n(long n, long cap, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative index");
  if (n > cap) throw std::invalid_argument(std::string(what) + ": index above cap " + std::to_string(cap));
}

MPoly V(int v, int32_t p = 1) { return MPoly::var(v, p); }
MPoly Z(const mpz_class& z) { return MPoly(GaussRat(z)); }
long sgn(long k) { return k % 2 ? -1 : 1; }

// 1/(1-q)^e as a factored RatFunc times p
RatFunc over_one_minus_q(const MPoly& p, long e) {
  if (e == 0 || p.is_zero()) return RatFunc(p);
  return RatFunc::from_parts(p, {{MPoly(1) - V(VQ), static_cast<int>(e)}});
}

// (1-q^m)/(1-q) kept factored: [m]_q with a generic base polynomial
RatFunc qint_tq(long m, const MPoly& t) {
  return RatFunc::from_parts(MPoly(1) - t * V(VQ, static_cast<int32_t>(m)), {{MPoly(1) - V(VQ), 1}});
}

// C(n,j)C(n,j+k) - C(n,j-1)C(n,j+k+1)
mpz_class narayana_like(long n, long j, long k) {
  return binom(n, j) * binom(n, j + k) - binom(n, j - 1) * binom(n, j + k + 1);
}

// sum over u+v+2t = k of a^u b^v w^t y^{v+t}... with caller-chosen monomials
MPoly uvt_sum(long k, const MPoly& a, const MPoly& b, const MPoly& w) {
  MPoly h;
  for (long u = 0; u <= k; ++u)
    for (long v = 0; u + v <= k; ++v) {
      if ((k - u - v) % 2) continue;
      long t = (k - u - v) / 2;
      MPoly term = a.pow(u) * b.pow(v) * w.pow(t) * V(VQ, static_cast<int32_t>(t * (t + 1) / 2)) *
                   q_multinomial(u + v + t, {u, v, t});
      h += sgn(t) == 1 ? term : -term;
    }
  return h;
}

MPoly invert_vars(const MPoly& p, std::initializer_list<int> vars) {
  std::vector<MPoly::Term> terms;
  for (const auto& [m, c] : p.terms()) {
    Mono x = m;
    for (int v : vars) x.e[v] = -x.e[v];
    terms.emplace_back(x, c);
  }
  return MPoly::from_terms(std::move(terms));
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::QLaguerre: return "q-laguerre";
    case Family::JV: return "jv";
    case Family::JVRubey: return "jv-rubey";
    case Family::TQEuler: return "tq-euler";
  }
  return "?";
}

// ---- q-Laguerre ----

RatFunc nu_corteel(long n) {
  check_n(n, kRelatedCap, "nu_corteel");
  const MPoly y = V(VY);
  MPoly s;
  for (long k = 0; k <= n; ++k) {
    MPoly g;
    for (long j = 0; j <= n - k; ++j) g += y.pow(j) * Z(narayana_like(n, j, k));
    MPoly h;
    for (long i = 0; i <= k; ++i) h += y.pow(i) * V(VQ, static_cast<int32_t>(i * (k + 1 - i)));
    s += sgn(k) == 1 ? g * h : -(g * h);
  }
  return over_one_minus_q(s, n);
}

namespace {

MPoly williams_sum(long n, bool times_one_minus_q) {
  const MPoly y = V(VY), q = V(VQ);
  MPoly s;
  for (long i = 0; i <= n; ++i)
    for (long j = 0; j <= i; ++j) {
      MPoly br = times_one_minus_q ? (MPoly(1) - q.pow(i - j)).pow(n) : q_int(i - j).pow(n);
      MPoly term = y.pow(i) * br * V(VQ, static_cast<int32_t>(i * (j - i))) *
                   (Z(binom(n, j)) * q.pow(i - j) + Z(binom(n, j - 1)));
      s += sgn(j) == 1 ? term : -term;
    }
  return s;
}

}  // namespace

RatFunc nu_williams(long n) {
  check_n(n, kRelatedCap, "nu_williams");
  return RatFunc(williams_sum(n, false));
}

VerificationReport laguerre_equivalence_check(long n) {
  check_n(n, kRelatedCap, "laguerre_equivalence_check");
  MPoly lhs = williams_sum(n, false) * (MPoly(1) - V(VQ)).pow(n);
  // the binomial-expanded left side is computed separately as a cross-check
  MPoly lhs2 = williams_sum(n, true);
  MPoly rhs = (nu_corteel(n) * RatFunc((MPoly(1) - V(VQ)).pow(n))).to_polynomial();
  VerificationReport rep;
  rep.add("related", "q-Laguerre formulas agree after clearing (1-q)^n n=" + std::to_string(n),
          lhs == rhs && lhs2 == rhs);
  return rep;
}

// ---- JV partition function ----

RatFunc jv_zn(long n) {
  check_n(n, kRelatedCap, "jv_zn");
  const MPoly y = V(VY), a = V(VA), b = V(VB);
  MPoly s;
  for (long k = 0; k <= n; ++k) {
    MPoly h;
    for (long r = 0; r <= k; ++r) h += q_binomial(k, r) * a.pow(r) * (y * b).pow(k - r);
    for (long i = 0; 2 * i <= n - k; ++i) {
      MPoly f = (-y).pow(i) * V(VQ, static_cast<int32_t>(i * (i + 1) / 2)) * q_binomial(k + i, i);
      MPoly g;
      for (long j = 0; j <= n - k - 2 * i; ++j) g += y.pow(j) * Z(narayana_like(n, j, k + 2 * i));
      s += f * g * h;
    }
  }
  return over_one_minus_q(s, n);
}

RatFunc jv_zn_derived(long n) {
  check_n(n, kRelatedCap, "jv_zn_derived");
  const MPoly y = V(VY);
  MPoly s;
  for (long k = 0; k <= n; ++k) {
    MPoly g;
    for (long j = 0; j <= n - k; ++j) g += y.pow(j) * Z(narayana_like(n, j, k));
    // y^{v+t}: fold y into b and into the t-weight
    s += g * uvt_sum(k, V(VA), V(VB) * y, y);
  }
  return over_one_minus_q(s, n);
}

// ---- JV-Rubey ----

RatFunc jvr_moment(long n) {
  check_n(n, kRelatedCap, "jvr_moment");
  const MPoly c = V(VC), d = V(VD);
  MPoly s;
  for (long k = 0; k <= n; ++k) {
    MPoly h = uvt_sum(k, V(VA), V(VB), c);
    for (long m = k; m <= n; m += 2)
      s += c.pow((m - k) / 2) * d.pow(n - m) * Z(binom(n, m) * ballot_diff_variant(m, k)) * h;
  }
  return RatFunc(s);
}

// ---- (t,q)-Euler ----

MPoly euler_t_k(long k) {
  check_n(k, 2 * kRelatedCap, "euler_t_k");
  const MPoly t = V(VT);
  const QCtx q2 = QCtx::q2();
  MPoly s;
  for (long j = 0; j <= k; ++j)
    for (long i = 0; i <= j; ++i) {
      MPoly term = t.pow(2 * i) * V(VQ, static_cast<int32_t>(j * j + i * i + i)) * q_binomial(k - j, i, q2) *
                   (q_binomial(k - i, j - i, q2) + t * q_binomial(k - i - 1, j - i - 1, q2));
      s += sgn(j + i) == 1 ? term : -term;
    }
  return s;
}

RatFunc euler_kim(long n) {
  check_n(n, kEulerCap, "euler_kim");
  MPoly s;
  for (long k = 0; k <= n; ++k) {
    MPoly tk = invert_vars(euler_t_k(k), {VT, VQ});
    s += Z(binom(2 * n, n - k) - binom(2 * n, n - k - 1)) * V(VT, static_cast<int32_t>(k)) *
         V(VQ, static_cast<int32_t>(k * (k + 1))) * tk;
  }
  return over_one_minus_q(s, 2 * n);
}

namespace {

// sum_i q^{binom(i+e,2)} (q;q^2)_{k-i} x^{k-i or i} [2k-i, i]_q
MPoly entq_inner(long k, bool prop_form) {
  const MPoly q = V(VQ), t = V(VT);
  MPoly s;
  for (long i = 0; i <= k; ++i) {
    MPoly poch = q_pochhammer(q, k - i, QCtx::q2());
    MPoly bin = q_binomial(2 * k - i, i);
    if (prop_form)
      s += V(VQ, static_cast<int32_t>(i * (i + 1) / 2)) * poch * (q * t).pow(k - i) * bin;
    else
      s += V(VQ, static_cast<int32_t>(i * (i - 1) / 2)) * poch * t.pow(i) * bin;
  }
  return s;
}

}  // namespace

RatFunc euler_prop(long n) {
  check_n(n, kEulerCap, "euler_prop");
  MPoly s;
  for (long k = 0; k <= n; ++k) {
    MPoly term = Z(binom(2 * n, n - k) - binom(2 * n, n - k - 1)) * entq_inner(k, true);
    s += sgn(k) == 1 ? term : -term;
  }
  return over_one_minus_q(s, 2 * n);
}

RatFunc euler_zeng(long n) {
  check_n(n, kZengCap, "euler_zeng");
  const MPoly t = V(VT), t2 = t * t;
  RatSum sum;
  for (long m = 0; m <= n; ++m)
    for (long i = 0; i <= m; ++i) {
      Factors f(GaussRat(sgn(n - i)));
      f.mono(Mono::var(VQ, static_cast<int32_t>(2 * m - 2 * i * n + i * i - n - i)));
      f.mono(Mono::var(VT, static_cast<int32_t>(-n)));
      for (long j = 1; j <= 2 * m; ++j) f.mul(qint_tq(j, t));
      f.mul(qint_tq(2 * i + 1, t).pow(2 * n));
      for (long k = 1; k <= i; ++k) f.div(qint_tq(2 * k, MPoly(1)));
      for (long k = 1; k <= m - i; ++k) f.div(qint_tq(2 * k, MPoly(1)));
      for (long k = 0; k <= m; ++k)
        if (k != i) f.div(qint_tq(2 * k + 2 * i + 2, t2));
      sum.add(f.build());
    }
  return sum.total();
}

VerificationReport euler_tk_identity_check(long k) {
  check_n(k, kRelatedCap, "euler_tk_identity_check");
  MPoly lhs = V(VQ, static_cast<int32_t>(k * k)) * invert_vars(euler_t_k(k), {VQ});
  if (k % 2) lhs = -lhs;
  VerificationReport rep;
  rep.add("related", "T_k identity behind the two Euler formulas k=" + std::to_string(k),
          lhs == entq_inner(k, false));
  return rep;
}

// ---- families ----

ConnectionFamily connection_family(Family f) {
  auto scaled = [](RatFunc (*g)(long)) {
    return [g](long n) { return g(n) * RatFunc((MPoly(1) - V(VQ)).pow(n)); };
  };
  switch (f) {
    case Family::QLaguerre:
      return {f, q_laguerre_spec(), {{"corteel", nu_corteel}, {"williams", nu_williams}}, kRelatedCap};
    case Family::JV:
      return {f, jv_spec(), {{"zn", scaled(jv_zn)}, {"zn-derived", scaled(jv_zn_derived)}}, kRelatedCap};
    case Family::JVRubey:
      return {f, jv_rubey_spec(), {{"rescaled-double-sum", jvr_moment}}, kRelatedCap};
    case Family::TQEuler:
      return {f, tq_euler_spec(), {{"kim", euler_kim}, {"prop", euler_prop}, {"zeng", euler_zeng}}, kZengCap};
  }
  throw std::invalid_argument("connection_family: unknown family");
}

std::vector<ConnectionFamily> connection_families() {
  std::vector<ConnectionFamily> out;
  for (Family f : {Family::QLaguerre, Family::JV, Family::JVRubey, Family::TQEuler})
    out.push_back(connection_family(f));
  return out;
}

VerificationReport family_check(const ConnectionFamily& f, long N) {
  VerificationReport rep;
  MomentTable mt = moment_table(f.spec, N);
  for (const auto& [name, g] : f.formulas)
    for (long n = 0; n <= N; ++n) {
      // the Zeng form is capped lower than the others
      if (name == "zeng" && n > kZengCap) continue;
      if (name != "zeng" && f.tag == Family::TQEuler && n > kEulerCap) continue;
      bool ok = ratfunc_equal(g(n), mt.moments[n]);
      rep.add("related", std::string(family_name(f.tag)) + " " + name + " = oracle n=" + std::to_string(n), ok);
    }
  return rep;
}

namespace {

const std::vector<RatFunc>& aw_cd0(long N) {
  static std::mutex mu;
  static std::vector<RatFunc> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<long>(cache.size()) <= N) {
    AWParams p;
    p.c = RatFunc();
    p.d = RatFunc();
    cache = aw_moments(p, N);
  }
  return cache;
}

MomentTable aw_at(long N, const RatFunc& a, const RatFunc& b) {
  MomentTable mt;
  mt.spec_name = "askey-wilson";
  const auto& g = aw_cd0(N);
  for (long n = 0; n <= N; ++n) mt.moments.push_back(g[n].substitute({{VA, a}, {VB, b}}));
  return mt;
}

}  // namespace

VerificationReport rescaling_check(long N) {
  check_n(N, kRelatedCap, "rescaling_check");
  VerificationReport rep;
  const RatFunc t = RatFunc::var(VT), a = RatFunc::var(VA), b = RatFunc::var(VB), q = RatFunc::var(VQ);
  const RatFunc ti = t.inverse(), two(2);
  const RatFunc shift = (t + ti) * RatFunc(GaussRat(mpq_class(1, 2)));
  auto tag = [](long n) { return " n=" + std::to_string(n); };

  // q-Laguerre: (1-q)^n nu_n(y = t^2)
  {
    MomentTable lhs = rescale_moments(aw_at(N, -q * t, -ti), two * t, shift);
    MomentTable nu = moment_table(q_laguerre_spec(), N);
    for (long n = 0; n <= N; ++n) {
      RatFunc want = nu.moments[n].substitute({{VY, t * t}}) * RatFunc((MPoly(1) - V(VQ)).pow(n));
      rep.add("related", "rescaling rebuilds (1-q)^n nu_n" + tag(n), ratfunc_equal(lhs.moments[n], want));
    }
  }
  // JV: (1-q)^n Z_n(y = t^2), the JV oracle itself
  {
    MomentTable lhs = rescale_moments(aw_at(N, a * ti, b * t), two * t, shift);
    MomentTable jv = moment_table(jv_spec(), N);
    for (long n = 0; n <= N; ++n)
      rep.add("related", "rescaling rebuilds (1-q)^n Z_n" + tag(n),
              ratfunc_equal(lhs.moments[n], jv.moments[n].substitute({{VY, t * t}})));
  }
  // JV-Rubey at c = t^2
  {
    MomentTable lhs = rescale_moments(aw_at(N, a * ti, b * ti), two * t, RatFunc::var(VD) * ti / two);
    MomentTable r = moment_table(jv_rubey_spec(), N);
    for (long n = 0; n <= N; ++n)
      rep.add("related", "rescaling rebuilds R_n" + tag(n),
              ratfunc_equal(lhs.moments[n], r.moments[n].substitute({{VC, t * t}})));
  }
  return rep;
}

VerificationReport related_checks(long n_nu, long n_jv, long n_euler, long k3, long n_resc) {
  VerificationReport rep;
  rep.add("related", "nu_0 = 1", ratfunc_equal(nu_corteel(0), RatFunc(1)));
  rep.add("related", "nu_1 = y", ratfunc_equal(nu_corteel(1), RatFunc::var(VY)));
  rep.add("related", "E_1 = [1]_q [1]_{t,q}", ratfunc_equal(euler_kim(1), qint_tq(1, V(VT))));
  rep.merge(family_check(connection_family(Family::QLaguerre), n_nu));
  for (long n = 0; n <= n_nu; ++n) rep.merge(laguerre_equivalence_check(n));
  rep.merge(family_check(connection_family(Family::JV), n_jv));
  for (long n = 0; n <= n_jv; ++n)
    rep.add("related", "JV Z_n forms agree n=" + std::to_string(n), ratfunc_equal(jv_zn(n), jv_zn_derived(n)));
  rep.merge(family_check(connection_family(Family::JVRubey), n_jv));
  rep.merge(family_check(connection_family(Family::TQEuler), n_euler));
  for (long k = 0; k <= k3; ++k) rep.merge(euler_tk_identity_check(k));
  rep.merge(rescaling_check(n_resc));
  return rep;
}

}  // namespace awm
