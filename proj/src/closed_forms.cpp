#include "awm/closed_forms.hpp"

#include "awm/qcalc.hpp"

namespace awm {

const char* formula_name(FormulaId id) {
  switch (id) {
    case FormulaId::DoubleSum: return "DoubleSum";
    case FormulaId::TripleSum: return "TripleSum";
    case FormulaId::D0: return "D0";
    case FormulaId::CD0: return "CD0";
    case FormulaId::BQoverA: return "BQoverA";
    case FormulaId::BnegA: return "BnegA";
    case FormulaId::SymmCDsum: return "SymmCDsum";
    case FormulaId::SymmTriple: return "SymmTriple";
    case FormulaId::W87: return "W87";
    case FormulaId::W87AsqQ: return "W87AsqQ";
    case FormulaId::Main: return "Main";
    case FormulaId::Main2: return "Main2";
    case FormulaId::Q0: return "Q0";
    case FormulaId::Flip: return "Flip";
    case FormulaId::AntiSymABBA: return "AntiSymABBA";
    case FormulaId::AntiSymABAB: return "AntiSymABAB";
    case FormulaId::Tau2n: return "Tau2n";
    case FormulaId::OPbar: return "OPbar";
  }
  return "?";
}

namespace {

MPoly V(int v, long p = 1) { return MPoly::var(v, p); }
MPoly Qp(long k) { return MPoly::var(VQ, k); }
Mono M(int v, long p) { return Mono::var(v, p); }
GaussRat sign(long k) { return GaussRat(k % 2 ? -1 : 1); }
long tri(long t) { return t * (t + 1) / 2; }  // binom(t+1, 2), fine for negative t
long choose2(long m) { return m * (m - 1) / 2; }

RatFunc over_pow(const RatFunc& r, long base, long n) {
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), base, n);
  return r * RatFunc(GaussRat(mpq_class(mpz_class(1), d)));
}

RatFunc over_pow(const MPoly& p, long base, long n) { return over_pow(RatFunc(p), base, n); }

const QCtx& q2() {
  static const QCtx c = QCtx::q2();
  return c;
}

}  // namespace

RatFunc mu_double_sum(long n) {
  const MPoly a = V(VA), b = V(VB), c = V(VC), d = V(VD), q = V(VQ);
  RatSum outer;
  for (long m = 0; m <= n; ++m) {
    RatSum inner;
    for (long j = 0; j <= m; ++j) {
      Factors f;
      f.mono(M(VQ, -j * j) * M(VA, -2 * j));
      f.mul((a * Qp(j) + Qp(-j) * V(VA, -1)).pow(n));
      poch_into(f, q, j, true);
      poch_into(f, Qp(1 - 2 * j) * V(VA, -2), j, true);
      poch_into(f, q, m - j, true);
      poch_into(f, Qp(2 * j + 1) * V(VA, 2), m - j, true);
      inner.add(f.build());
    }
    Factors g;
    poch_into(g, a * b, m, false);
    poch_into(g, a * c, m, false);
    poch_into(g, a * d, m, false);
    poch_into(g, a * b * c * d, m, true);
    g.mono(M(VQ, m));
    g.mul(inner.total());
    outer.add(g.build());
  }
  return over_pow(outer.total(), 2, n);
}

std::vector<RatFunc> triple_sum_terms(long n) {
  const MPoly a = V(VA), b = V(VB), c = V(VC), d = V(VD);
  std::vector<RatFunc> out;
  for (long m = 0; m <= n; ++m) {
    MPoly inner;
    for (long s = 0; s <= n + 1; ++s) {
      mpz_class bd = ballot_diff(n, s);
      if (bd == 0) continue;
      for (long p = 0; p <= n - 2 * s - m; ++p)
        inner += (q_binomial(m + p, m) * q_binomial(n - 2 * s - p, m))
                     .shifted(M(VA, -n + 2 * s + 2 * p) * M(VQ, (-n + 2 * s + p) * m + choose2(m)))
                     .scaled(GaussRat(bd));
    }
    Factors f(sign(m));
    f.mono(M(VQ, m));
    poch_into(f, a * b, m, false);
    poch_into(f, a * c, m, false);
    poch_into(f, a * d, m, false);
    poch_into(f, a * b * c * d, m, true);
    f.mul(inner);
    out.push_back(f.build());
  }
  return out;
}

RatFunc mu_triple_sum(long n) {
  RatSum s;
  for (const auto& t : triple_sum_terms(n)) s.add(t);
  return over_pow(s.total(), 2, n);
}

RatFunc mu_d0(long n) {
  MPoly sum;
  for (long k = 0; k <= n; ++k) {
    mpz_class bl = ballot_diff_variant(n, k);
    if (bl == 0) continue;
    for (long u = 0; u <= k; ++u)
      for (long v = 0; v <= k; ++v)
        for (long w = 0; w <= k; ++w) {
          long r = k - u - v - w;
          if (r % 2) continue;
          long t = r / 2;
          if (t < -k || 2 * t > k) continue;
          MPoly term = q_binomial(u + v + t, v) * q_binomial(v + w + t, w) * q_binomial(w + u + t, u);
          if (term.is_zero()) continue;
          Mono mono = M(VA, u) * M(VB, v) * M(VC, w) * M(VQ, tri(t));
          sum += term.shifted(mono).scaled(sign(t) * GaussRat(bl));
        }
  }
  return over_pow(sum, 2, n);
}

RatFunc mu_two_param(TwoParam variant, long n) {
  MPoly sum;
  switch (variant) {
    case TwoParam::CD0:
      for (long k = 0; k <= n; ++k) {
        mpz_class bl = ballot_diff_variant(n, k);
        if (bl == 0) continue;
        for (long t = 0; 2 * t <= k; ++t)
          for (long u = 0; u + 2 * t <= k; ++u) {
            long v = k - 2 * t - u;
            sum += q_multinomial(u + v + t, {u, v, t})
                       .shifted(M(VA, u) * M(VB, v) * M(VQ, tri(t)))
                       .scaled(sign(t) * GaussRat(bl));
          }
      }
      return over_pow(sum, 2, n);
    case TwoParam::BQoverA:
      for (long k = 0; k <= n; ++k) {
        mpz_class bl = ballot_diff_variant(n, k);
        if (bl == 0) continue;
        MPoly inner;
        for (long i = 0; i <= k; ++i) inner += MPoly::monomial(M(VA, 2 * i) * M(VQ, i * (k - i - 1)));
        sum += inner.shifted(M(VQ, k) * M(VA, -k)).scaled(GaussRat(bl));
      }
      return over_pow(sum, 2, n);
    case TwoParam::BnegA: {
      if (n % 2) return RatFunc();
      long h = n / 2;
      for (long k = 0; k <= h; ++k) {
        mpz_class bl = binom(2 * h, h - k) - binom(2 * h, h - k - 1);
        if (bl == 0) continue;
        MPoly inner;
        for (long i = 0; i <= k; ++i)
          inner += (q_pochhammer(V(VQ), k - i, q2()) * q_binomial(2 * k - i, i))
                       .shifted(M(VQ, tri(i)) * M(VA, 2 * k - 2 * i))
                       .scaled(sign(i));
        sum += inner.scaled(GaussRat(bl));
      }
      return over_pow(sum, 4, h);
    }
  }
  throw std::logic_error("unreachable");
}

RatFunc mu_symmetric(Symm variant, long n) {
  const MPoly a2 = V(VA, 2), c2 = V(VC, 2), q = V(VQ), qq = V(VQ, 2);
  RatSum outer;
  for (long m = 0; m <= n; ++m) {
    Factors pre;
    poch_into(pre, -a2, 2 * m, false);
    poch_into(pre, a2 * c2, m, false, q2());
    poch_into(pre, q * a2 * c2, m, true, q2());
    if (variant == Symm::CDsum) {
      pre.mono(M(VQ, 2 * m));
      RatSum inner;
      for (long j = 0; j <= m; ++j) {
        Factors f;
        f.mono(M(VA, -4 * j) * M(VQ, -2 * j * j));
        f.mul((V(VA) * Qp(j) + V(VA, -1) * Qp(-j)).pow(2 * n));
        poch_into(f, qq, m - j, true, q2());
        poch_into(f, V(VA, 4) * Qp(2 + 4 * j), m - j, true, q2());
        poch_into(f, qq, j, true, q2());
        poch_into(f, V(VA, -4) * Qp(2 - 4 * j), j, true, q2());
        inner.add(f.build());
      }
      pre.mul(inner.total());
    } else {
      pre.scale(sign(m)).mono(M(VQ, 2 * m));
      MPoly inner;
      for (long s = 0; s <= 2 * n + 2; ++s) {
        mpz_class bl = ballot_diff(2 * n + 1, s);
        if (bl == 0) continue;
        for (long p = 0; p <= n - m - s; ++p)
          inner += (q_binomial(m + p, m, q2()) * q_binomial(n - p - s, m, q2()))
                       .shifted(M(VA, -2 * n + 4 * p + 2 * s) * M(VQ, -2 * m * (n - p - s) + m * (m - 1)))
                       .scaled(GaussRat(bl));
      }
      pre.mul(inner);
    }
    outer.add(pre.build());
  }
  return over_pow(outer.total(), 4, n);
}

MPoly tau_2n(long n) {
  RatFunc mu = mu_symmetric(Symm::Triple, n);
  Factors f(GaussRat(mpz_class(mpz_class(1) << (2 * n))));
  poch_into(f, V(VQ) * V(VA, 2) * V(VC, 2), n, false, q2());
  for (long i = 0; i < n; ++i) f.div(MPoly(1) - V(VQ));
  f.mul(mu);
  RatFunc r = f.build().reduced();
  if (!r.is_polynomial())
    throw std::domain_error("tau_2n: quotient by (1-q)^n is not a polynomial at n=" + std::to_string(n));
  return r.numerator();
}

RatFunc w87_finite_sum(long m, const MPoly& A) {
  const MPoly a = V(VA), b = V(VB), c = V(VC), d = V(VD), q = V(VQ);
  const MPoly A2 = A * A;
  RatSum s;
  for (long j = 0; j <= m; ++j) {
    Factors f(sign(j));
    poch_into(f, A2 * Qp(-1), j, false);
    poch_into(f, A2 * Qp(m), j, true);
    f.mul(MPoly(1) - A2 * Qp(2 * j - 1));
    f.div(MPoly(1) - A2 * Qp(-1));
    f.mul(q_binomial(m, j));
    f.mono(M(VQ, choose2(j)));
    f.mul((a * b * c * d).pow(j));
    for (const MPoly& x : {a, b, c, d}) {
      poch_into(f, A * x.pow(-1), j, false);
      poch_into(f, A * x * Qp(j), m - j, false);
    }
    s.add(f.build());
  }
  return s.total();
}

RatFunc ews(long m, const MPoly& A) {
  Factors f;
  f.mul(w87_finite_sum(m, A));
  for (const MPoly& x : {V(VA), V(VB), V(VC), V(VD)}) poch_into(f, A * x, m, true);
  return f.build();
}

MPoly w87_poly_sum(long m, const MPoly& A) {
  const MPoly a = V(VA), b = V(VB), c = V(VC), d = V(VD);
  MPoly s;
  for (long j = 0; j <= m; ++j) {
    MPoly t = q_binomial(m, j) * (c * d).pow(j);
    t = t * q_pochhammer(A * c.pow(-1), j) * q_pochhammer(A * d.pow(-1), j) * q_pochhammer(a * b, j);
    t = t * q_pochhammer(A * a * Qp(j), m - j) * q_pochhammer(A * b * Qp(j), m - j) *
        q_pochhammer(c * d, m - j);
    s += t;
  }
  return s;
}

std::vector<RatFunc> w87_terms(ABinding binding, long n) {
  const MPoly a = V(VA), b = V(VB), c = V(VC), d = V(VD);
  const MPoly A = binding == ABinding::A_is_a ? a : V(VAA);
  const bool weird = binding == ABinding::SqrtQ;
  // q itself, as it appears in the sums
  const MPoly qv = weird ? V(VAA, 2) : V(VQ);
  const QCtx ctx(qv);
  std::vector<RatFunc> out;
  for (long m = 0; m <= n; ++m) {
    RatFunc e = ews(m, A);
    if (weird) e = e.substitute({{VQ, RatFunc(qv)}});
    MPoly inner;
    for (long s = 0; s <= n + 1; ++s) {
      mpz_class bl = ballot_diff(n, s);
      if (bl == 0) continue;
      if (weird) {
        inner += (q_binomial(n + m + 1 - 2 * s, 2 * m + 1, ctx) * A.pow(-n + 2 * s) *
                  qv.pow(-n * m + 2 * s * m + choose2(m)))
                     .scaled(GaussRat(bl));
      } else {
        for (long p = 0; p <= n - 2 * s - m; ++p)
          inner += (q_binomial(m + p, m, ctx) * q_binomial(n - 2 * s - p, m, ctx) *
                    A.pow(-n + 2 * s + 2 * p) * qv.pow(m * (-n + 2 * s + p) + choose2(m)))
                       .scaled(GaussRat(bl));
      }
    }
    Factors f(sign(m));
    f.mul(qv.pow(m));
    for (const MPoly& x : {a, b, c, d}) poch_into(f, A * x, m, false, ctx);
    poch_into(f, A * A, m, true, ctx);
    poch_into(f, a * b * c * d, m, true, ctx);
    f.mul(e);
    f.mul(inner);
    out.push_back(f.build());
  }
  return out;
}

RatFunc mu_8w7(ABinding binding, long n) {
  RatSum s;
  for (const auto& t : w87_terms(binding, n)) s.add(t);
  return over_pow(s.total(), 2, n);
}

MPoly op_bar(long n, long m) {
  if (n < 0 || m < 0 || (n - m) % 2) return MPoly();
  MPoly s;
  for (long k = m; k <= n; k += 2) {
    mpz_class bl = ballot_diff_variant(n, k);
    if (bl == 0) continue;
    long h = (k - m) / 2;
    s += q_binomial((k + m) / 2, h).shifted(M(VQ, tri(h))).scaled(sign(h) * GaussRat(bl));
  }
  return s;
}

RatFunc mu_main(long n) {
  const MPoly a = V(VA), b = V(VB), c = V(VC), d = V(VD);
  RatSum sum;
  for (long al = 0; al <= n; ++al)
    for (long be = 0; al + be <= n; ++be)
      for (long ga = 0; al + be + ga <= n; ++ga) {
        // the rational part depends on beta, gamma only
        MPoly inner;
        for (long de = 0; al + be + ga + de <= n; ++de) {
          long t = al + be + ga + de;
          MPoly ob = op_bar(n, t);
          if (ob.is_zero()) continue;
          inner += (ob * q_multinomial(t, {al, be, ga, de})).shifted(M(VD, de));
        }
        if (inner.is_zero()) continue;
        Factors f;
        f.mono(M(VA, al) * M(VB, be) * M(VC, ga));
        f.mul(inner);
        poch_into(f, a * d, be + ga, false);
        poch_into(f, a * c, be, false);
        poch_into(f, b * d, ga, false);
        poch_into(f, a * b * c * d, be + ga, true);
        sum.add(f.build());
      }
  return over_pow(sum.total(), 2, n);
}

RatFunc mu_main2(long n) {
  const MPoly a = V(VA), b = V(VB), c = V(VC), d = V(VD);
  std::map<std::pair<long, long>, MPoly> by_bg;
  for (long k = 0; k <= n; ++k) {
    mpz_class bl = ballot_diff_variant(n, k);
    if (bl == 0) continue;
    // -k <= t <= k/2 and alpha+beta+gamma+delta = k - 2t <= 3k
    for (long t = -k; 2 * t <= k; ++t) {
      long tot = k - 2 * t;
      for (long al = 0; al <= tot; ++al)
        for (long be = 0; al + be <= tot; ++be)
          for (long ga = 0; al + be + ga <= tot; ++ga) {
            long de = tot - al - be - ga;
            MPoly x = q_binomial(al + be + ga + t, al);
            if (x.is_zero()) continue;
            x = x * q_binomial(de + al + t, de);
            if (x.is_zero()) continue;
            if (de + t < 0) continue;  // extended multinomial
            x = x * q_multinomial(be + ga + de + t, {be, ga, de + t});
            if (x.is_zero()) continue;
            by_bg[{be, ga}] += x.shifted(M(VA, al) * M(VB, be) * M(VC, ga) * M(VD, de) * M(VQ, tri(t)))
                                   .scaled(sign(t) * GaussRat(bl));
          }
    }
  }
  RatSum sum;
  for (auto& [bg, poly] : by_bg) {
    if (poly.is_zero()) continue;
    Factors f;
    f.mul(poly);
    poch_into(f, a * c, bg.first, false);
    poch_into(f, b * d, bg.second, false);
    poch_into(f, a * b * c * d, bg.first + bg.second, true);
    sum.add(f.build());
  }
  return over_pow(sum.total(), 2, n);
}

RatFunc mu_q0(long n) {
  const MPoly a = V(VA), b = V(VB), c = V(VC), d = V(VD);
  MPoly part[4];  // indexed by (beta != 0) + 2 (gamma != 0)
  for (long k = 0; k <= n; ++k) {
    mpz_class bl = ballot_diff_variant(n, k);
    if (bl == 0) continue;
    for (long al = 0; al <= k; ++al)
      for (long be = 0; al + be <= k; ++be)
        for (long ga = 0; al + be + ga <= k; ++ga) {
          long de = k - al - be - ga;
          part[(be != 0) + 2 * (ga != 0)] +=
              MPoly::monomial(M(VA, al) * M(VB, be) * M(VC, ga) * M(VD, de), GaussRat(bl));
        }
  }
  const MPoly one(1), den = one - a * b * c * d;
  auto phi = [&](bool bnz, bool gnz) {
    if (bnz && gnz) return RatFunc::from_factors({one - a * c, one - b * d, one - a * d}, {den});
    if (gnz) return RatFunc::from_factors({one - b * d, one - a * d}, {den});
    if (bnz) return RatFunc::from_factors({one - a * c, one - a * d}, {den});
    return RatFunc(1);
  };
  RatSum s;
  for (int i = 0; i < 4; ++i)
    if (!part[i].is_zero()) s.add(RatFunc(part[i]) * phi(i & 1, i & 2));
  return over_pow(s.total(), 2, n);
}

RatFunc mu_flip(long n) {
  RatSum s;
  for (long k = 0; k <= n; ++k) {
    mpz_class bl = ballot_diff_variant(n, k);
    if (bl == 0) continue;
    MPoly inner;
    for (long A = -k; A <= k; ++A)
      for (long B = -k; B <= k; ++B) {
        if (std::abs(A) + std::abs(B) > k || ((A + B - k) % 2 + 2) % 2) continue;
        inner += MPoly::monomial(M(VA, A) * M(VB, B) * M(VQ, (k - A - B) / 2));
      }
    Factors f{GaussRat(bl)};
    f.mul(inner);
    f.div(q_int(k + 1));
    s.add(f.build());
  }
  return over_pow(s.total(), 2, n);
}

RatFunc mu_antisym(AntiSym variant, long n) {
  const MPoly a2 = V(VA, 2), b2 = V(VB, 2), q = V(VQ);
  RatSum s;
  if (variant == AntiSym::ABBA) {
    for (long al = 0; al <= n; ++al)
      for (long be = 0; al + be <= n; ++be) {
        MPoly ob = op_bar(2 * n, 2 * al + 2 * be);
        if (ob.is_zero()) continue;
        Factors f;
        f.mono(M(VA, 2 * al) * M(VB, 2 * be));
        f.mul(ob).mul(q_binomial(2 * al + 2 * be, 2 * al));
        poch_into(f, q, al, false, q2());
        poch_into(f, q, be, false, q2());
        poch_into(f, -a2, 2 * be, false);
        poch_into(f, q * a2 * b2, be, true, q2());
        s.add(f.build());
      }
  } else {
    for (long m = 0; m <= n; ++m) {
      MPoly ob = op_bar(2 * n, 2 * m);
      if (ob.is_zero()) continue;
      MPoly inner;
      for (long al = 0; al <= m; ++al)
        for (long be = 0; al + be <= m; ++be) {
          long i = m - al - be;
          inner += (q_pochhammer(-q, i) * q_multinomial(m, {al, be, i}, q2()))
                       .shifted(M(VA, 2 * al + 2 * i) * M(VB, 2 * be + 2 * i) * M(VQ, choose2(i)));
        }
      Factors f;
      f.mul(ob);
      poch_into(f, q, m, false, q2());
      poch_into(f, q * a2 * b2, m, true, q2());
      f.mul(inner);
      s.add(f.build());
    }
  }
  return over_pow(s.total(), 4, n);
}

}  // namespace awm
