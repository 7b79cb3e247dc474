#include "awm/oracle.hpp"

#include "awm/qcalc.hpp"

namespace awm {

namespace {

RatFunc one_minus(const RatFunc& x) { return RatFunc(1) - x; }

}  // namespace

RatFunc aw_A(long n, const AWParams& p) {
  const RatFunc &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  RatFunc abcd = a * b * c * d;
  Factors f;
  if (n == 0) {
    // the (1 - abcd/q) factor of the general formula cancels
    f.mul(one_minus(a * b)).mul(one_minus(a * c)).mul(one_minus(a * d));
    f.div(a).div(one_minus(abcd));
    return f.build();
  }
  RatFunc qn = q.pow(n);
  f.mul(one_minus(a * b * qn)).mul(one_minus(a * c * qn)).mul(one_minus(a * d * qn));
  f.mul(one_minus(abcd * q.pow(n - 1)));
  f.div(a).div(one_minus(abcd * q.pow(2 * n - 1))).div(one_minus(abcd * q.pow(2 * n)));
  return f.build();
}

RatFunc aw_C(long n, const AWParams& p) {
  if (n == 0) return RatFunc();  // the (1 - q^0) factor
  const RatFunc &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  RatFunc abcd = a * b * c * d, qn1 = q.pow(n - 1);
  Factors f;
  f.mul(a).mul(one_minus(q.pow(n)));
  f.mul(one_minus(b * c * qn1)).mul(one_minus(b * d * qn1)).mul(one_minus(c * d * qn1));
  f.div(one_minus(abcd * q.pow(2 * n - 2))).div(one_minus(abcd * q.pow(2 * n - 1)));
  return f.build();
}

static std::pair<RatFunc, RatFunc> scaled_coefficients(long n, const AWParams& p, long s) {
  RatFunc bn = (p.a + p.a.inverse() - aw_A(n, p) - aw_C(n, p)).reduced();
  bn = bn * RatFunc(GaussRat(mpq_class(s, 2)));
  if (n == 0) return {bn, RatFunc()};
  Factors f(GaussRat(mpq_class(s * s, 4)));
  f.mul(aw_A(n - 1, p)).mul(aw_C(n, p));
  return {bn, f.build()};
}

std::pair<RatFunc, RatFunc> aw_coefficients(long n, const AWParams& p) {
  if (n < 0) throw std::invalid_argument("negative recurrence index");
  return scaled_coefficients(n, p, 1);
}

RecurrenceSpec aw_spec(const AWParams& p, long scale) {
  RecurrenceSpec s;
  s.name = "askey-wilson";
  s.b = [p, scale](long n) { return scaled_coefficients(n, p, scale).first; };
  s.lambda = [p, scale](long n) { return scaled_coefficients(n, p, scale).second; };
  s.variables = {VA, VB, VC, VD, VQ};
  return s;
}

RecurrenceSpec q_laguerre_spec() {
  RecurrenceSpec s;
  s.name = "q-laguerre";
  const MPoly y = MPoly::var(VY);
  s.b = [y](long n) { return RatFunc(q_int(n) + y * q_int(n + 1)); };
  s.lambda = [y](long n) { return RatFunc(y * q_int(n).pow(2)); };
  s.variables = {VY, VQ};
  return s;
}

RecurrenceSpec jv_spec() {
  RecurrenceSpec s;
  s.name = "jv";
  const MPoly a = MPoly::var(VA), b = MPoly::var(VB), y = MPoly::var(VY), q = MPoly::var(VQ);
  s.b = [=](long n) { return RatFunc(MPoly(1) + y + (a + b * y) * q.pow(n)); };
  s.lambda = [=](long n) {
    return RatFunc(y * (MPoly(1) - q.pow(n)) * (MPoly(1) - a * b * q.pow(n - 1)));
  };
  s.variables = {VA, VB, VY, VQ};
  return s;
}

RecurrenceSpec jv_rubey_spec() {
  RecurrenceSpec s;
  s.name = "jv-rubey";
  const MPoly a = MPoly::var(VA), b = MPoly::var(VB), c = MPoly::var(VC), d = MPoly::var(VD),
              q = MPoly::var(VQ);
  s.b = [=](long n) { return RatFunc(d + (a + b) * q.pow(n)); };
  s.lambda = [=](long n) { return RatFunc((MPoly(1) - q.pow(n)) * (c - a * b * q.pow(n - 1))); };
  s.variables = {VA, VB, VC, VD, VQ};
  return s;
}

// Contraction of the Stieltjes fraction with c_k = [k]_q (1 - t q^k)/(1 - q).
RecurrenceSpec tq_euler_spec() {
  RecurrenceSpec s;
  s.name = "tq-euler";
  auto ck = [](long k) {
    const MPoly q = MPoly::var(VQ), t = MPoly::var(VT);
    return RatFunc::from_parts(q_int(k) * (MPoly(1) - t * q.pow(k)), {{MPoly(1) - q, 1}});
  };
  s.b = [ck](long n) { return n == 0 ? ck(1) : ck(2 * n) + ck(2 * n + 1); };
  s.lambda = [ck](long n) { return ck(2 * n - 1) * ck(2 * n); };
  s.variables = {VT, VQ};
  return s;
}

// b_n = 0; the symmetric weight after rescaling, in a, c, q
RecurrenceSpec aw_symmetric_rescaled_spec() {
  RecurrenceSpec s;
  s.name = "aw-symmetric-rescaled";
  s.b = [](long) { return RatFunc(); };
  s.lambda = [](long n) {
    const MPoly a2 = MPoly::var(VA, 2), c2 = MPoly::var(VC, 2), q = MPoly::var(VQ);
    Factors f;
    f.mul(MPoly(1) + a2 * q.pow(n - 1)).mul(MPoly(1) + c2 * q.pow(n - 1));
    f.mul(MPoly(1) - a2 * c2 * q.pow(n - 2));
    f.div(MPoly(1) - a2 * c2 * q.pow(2 * n - 3)).div(MPoly(1) - a2 * c2 * q.pow(2 * n - 1));
    f.mul(q_int(n));
    return f.build();
  };
  s.variables = {VA, VC, VQ};
  return s;
}

std::vector<std::string> spec_names() {
  return {"askey-wilson", "q-laguerre", "jv", "jv-rubey", "tq-euler", "aw-symmetric-rescaled"};
}

RecurrenceSpec named_spec(const std::string& name) {
  if (name == "askey-wilson") return aw_spec();
  if (name == "q-laguerre") return q_laguerre_spec();
  if (name == "jv") return jv_spec();
  if (name == "jv-rubey") return jv_rubey_spec();
  if (name == "tq-euler") return tq_euler_spec();
  if (name == "aw-symmetric-rescaled") return aw_symmetric_rescaled_spec();
  throw std::invalid_argument("unknown spec '" + name + "'");
}

MomentTable moment_table(const RecurrenceSpec& spec, long N, bool reduce) {
  if (N < 0) throw std::invalid_argument("negative moment order");
  MomentTable t;
  t.spec_name = spec.name;
  t.moments.push_back(RatFunc(1));
  if (N == 0) return t;
  // levels above N/2 never return to 0 in time
  long K = N / 2 + 1;
  std::vector<RatFunc> b(K + 1), lam(K + 2);
  for (long k = 0; k <= K; ++k) b[k] = spec.b(k);
  for (long k = 1; k <= K + 1; ++k) lam[k] = spec.lambda(k);
  std::vector<RatFunc> row(K + 2), next(K + 2);
  row[0] = RatFunc(1);
  for (long n = 0; n < N; ++n) {
    long top = std::min(n + 1, N - n - 1);
    for (long k = 0; k <= top && k <= K; ++k) {
      RatSum s;
      if (k > 0) s.add(row[k - 1]);
      if (!row[k].is_zero() && !b[k].is_zero()) s.add(b[k] * row[k]);
      if (k + 1 <= K && !row[k + 1].is_zero()) s.add(lam[k + 1] * row[k + 1]);
      next[k] = s.total(reduce);
    }
    for (long k = top + 1; k <= K + 1; ++k) next[k] = RatFunc();
    std::swap(row, next);
    t.moments.push_back(row[0]);
  }
  return t;
}

std::vector<RatFunc> aw_moments(const AWParams& p, long N) {
  MomentTable t = moment_table(aw_spec(p, 2), N);
  std::vector<RatFunc> out;
  for (long n = 0; n <= N; ++n)
    out.push_back(t.moments[n] * RatFunc(GaussRat(mpq_class(1, 1) / (mpz_class(1) << n))));
  return out;
}

MomentTable rescale_moments(const MomentTable& mu, const RatFunc& c, const RatFunc& d) {
  MomentTable r;
  r.spec_name = mu.spec_name + "-rescaled";
  RatFunc cn(1);
  for (size_t n = 0; n < mu.moments.size(); ++n) {
    RatSum s;
    for (size_t m = 0; m <= n; ++m)
      s.add(d.pow(n - m) * mu.moments[m], GaussRat(binom(n, m)));
    r.moments.push_back(cn * s.total());
    cn = cn * c;
  }
  return r;
}

std::vector<GaussRat> hankel_moments(const RecurrenceSpec& spec, long N, const Point& pt) {
  // p_n as coefficient vectors in x
  std::vector<std::vector<GaussRat>> P;
  P.push_back({GaussRat(1)});
  for (long n = 0; n < N; ++n) {
    GaussRat bn = spec.b(n).eval(pt);
    std::vector<GaussRat> nx(n + 2, GaussRat(0));
    for (long j = 0; j <= n; ++j) {
      nx[j + 1] += P[n][j];
      nx[j] -= bn * P[n][j];
    }
    if (n > 0) {
      GaussRat ln = spec.lambda(n).eval(pt);
      for (long j = 0; j < n; ++j) nx[j] -= ln * P[n - 1][j];
    }
    P.push_back(std::move(nx));
  }
  std::vector<GaussRat> mu{GaussRat(1)};
  for (long n = 1; n <= N; ++n) {
    GaussRat s(0);
    for (long j = 0; j < n; ++j) s -= P[n][j] * mu[j];
    mu.push_back(s);
  }
  return mu;
}

}  // namespace awm
