#include "awm/qcalc.hpp"

#include <mutex>

namespace awm {

QCtx::QCtx(MPoly base) : base_(std::move(base)) {
  if (base_ == MPoly(1)) throw std::invalid_argument("q-base must not be the constant 1");
  if (base_.is_zero()) throw std::invalid_argument("q-base must not be zero");
}

QCtx QCtx::q() { return QCtx(MPoly::var(VQ)); }
QCtx QCtx::q2() { return QCtx(MPoly::var(VQ, 2)); }

MPoly QCtx::power(long k) const { return base_.pow(k); }

MPoly lift(const UPoly& u, const QCtx& ctx) {
  const MPoly& x = ctx.base();
  if (x.is_monomial()) {
    std::vector<MPoly::Term> terms;
    for (size_t i = 0; i < u.size(); ++i)
      if (sgn(u[i]))
        terms.emplace_back(x.lead().first.pow(i), x.lead().second.pow(i) * GaussRat(u[i]));
    return MPoly::from_terms(std::move(terms));
  }
  MPoly r;
  for (size_t i = u.size(); i-- > 0;) r = r * x + MPoly(GaussRat(u[i]));
  return r;
}

static UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]))
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

mpz_class binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(long n) {
  if (n < 0) throw std::invalid_argument("negative factorial");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class double_factorial_odd(long n) {
  mpz_class r = 1;
  for (long k = 1; k <= n; ++k) r *= 2 * k - 1;
  return r;
}

static void require_nonneg(long n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative argument");
}

static UPoly uint_(long n) { return UPoly(n, 1); }

MPoly q_int(long n, const QCtx& ctx) {
  require_nonneg(n, "q_int");
  return lift(uint_(n), ctx);
}

static UPoly ufact(long n) {
  UPoly r{1};
  for (long k = 2; k <= n; ++k) r = umul(r, uint_(k));
  return r;
}

MPoly q_factorial(long n, const QCtx& ctx) {
  require_nonneg(n, "q_factorial");
  return lift(ufact(n), ctx);
}

MPoly q_double_factorial_even(long i, const QCtx& ctx) {
  require_nonneg(i, "q_double_factorial_even");
  UPoly r{1};
  for (long k = 1; k <= i; ++k) r = umul(r, uint_(2 * k));
  return lift(r, ctx);
}

MPoly q_pochhammer(const MPoly& x, long n, const QCtx& ctx) {
  require_nonneg(n, "q_pochhammer");
  MPoly r(1), xi = x;
  for (long i = 0; i < n; ++i) {
    r = r * (MPoly(1) - xi);
    xi = xi * ctx.base();
  }
  return r;
}

void poch_into(Factors& f, const MPoly& x, long n, bool divide, const QCtx& ctx) {
  require_nonneg(n, "q_pochhammer");
  MPoly xi = x;
  for (long i = 0; i < n; ++i) {
    MPoly fac = MPoly(1) - xi;
    if (divide)
      f.div(fac);
    else
      f.mul(fac);
    xi = xi * ctx.base();
  }
}

const UPoly& q_binomial_coeffs(long n, long k) {
  static std::mutex mu;
  static std::map<std::pair<long, long>, UPoly> cache;
  static const UPoly zero;
  if (n < 0 || k < 0 || k > n) return zero;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, k);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  // rows are built bottom-up, so references into the map stay valid
  for (long m = 0; m <= n; ++m) {
    for (long j = 0; j <= m; ++j) {
      auto kj = std::make_pair(m, j);
      if (cache.count(kj)) continue;
      UPoly r;
      if (j == 0 || j == m) {
        r = {1};
      } else {
        // [m,j] = [m-1,j-1] + x^j [m-1,j]
        const UPoly& a = cache.at({m - 1, j - 1});
        const UPoly& b = cache.at({m - 1, j});
        r.assign(std::max(a.size(), b.size() + j), 0);
        for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i + j] += b[i];
      }
      cache.emplace(kj, std::move(r));
    }
  }
  return cache.at(key);
}

MPoly q_binomial(long n, long k, const QCtx& ctx) { return lift(q_binomial_coeffs(n, k), ctx); }

MPoly q_multinomial(long n, const std::vector<long>& parts, const QCtx& ctx) {
  long s = 0;
  for (long p : parts) s += p;
  if (s != n) throw std::invalid_argument("q_multinomial: parts do not sum to n");
  UPoly r{1};
  long rem = n;
  for (long p : parts) {
    if (p < 0) return MPoly();
    r = umul(r, q_binomial_coeffs(rem, p));
    rem -= p;
  }
  return lift(r, ctx);
}

mpz_class ballot_diff(long n, long s) { return binom(n, s) - binom(n, s - 1); }

mpz_class ballot_diff_variant(long n, long k) {
  if ((n - k) % 2 != 0) return 0;
  return ballot_diff(n, (n - k) / 2);
}

mpz_class catalan_half(const mpq_class& x_in) {
  mpq_class x(x_in);
  x.canonicalize();
  if (x.get_den() != 1 || sgn(x) < 0) return 0;
  long m = x.get_num().get_si();
  return binom(2 * m, m) / (m + 1);
}

mpz_class narayana(long n, long k) {
  if (n <= 0) return n == 0 && k == 0 ? 1 : 0;
  return binom(n, k) * binom(n, k - 1) / n;
}

VerificationReport identity_checks(int N) {
  VerificationReport rep;
  const QCtx q = QCtx::q(), q2 = QCtx::q2();
  const MPoly Q = MPoly::var(VQ);
  for (int n = 0; n <= N; ++n) {
    MPoly lhs;
    for (int i = 0; i <= n; ++i) lhs += q_binomial(n, i).scaled(GaussRat(i % 2 ? -1 : 1));
    MPoly rhs = n % 2 ? MPoly() : q_pochhammer(Q, n / 2, q2);
    rep.add("qcalc", "gaussian n=" + std::to_string(n), lhs == rhs);
  }
  // Andrews, x played by the variable a
  const MPoly x = MPoly::var(VA);
  for (int n = 0; n <= N; ++n) {
    MPoly lhs;
    for (int i = 0; i <= n; ++i)
      lhs += (q_binomial(n, i) * q_pochhammer(x, n - i) * q_pochhammer(x, i))
                 .scaled(GaussRat(i % 2 ? -1 : 1));
    MPoly rhs = n % 2 ? MPoly() : q_pochhammer(Q, n / 2, q2) * q_pochhammer(x * x, n / 2, q2);
    rep.add("qcalc", "andrews n=" + std::to_string(n), lhs == rhs);
  }
  // q-Saalschutz in Zeilberger's form; negative k down to -min(a,b,c)
  int bad = 0, total = 0;
  std::string first_bad;
  for (int a = 0; a <= N; ++a)
    for (int b = 0; b <= N; ++b)
      for (int c = 0; c <= N; ++c)
        for (int k = -std::min({a, b, c}); k <= N; ++k) {
          MPoly lhs = q_binomial(a + b + k, a) * q_binomial(b + c + k, b) * q_binomial(c + a + k, c);
          MPoly rhs;
          for (int j = 0; j <= std::min({a, b, c}); ++j) {
            if (k + j < 0) continue;
            rhs += q_multinomial(a + b + c + k - j, {a - j, b - j, c - j, j, k + j}) *
                   Q.pow(long(j) * (j + k));
          }
          ++total;
          if (lhs != rhs) {
            if (!bad++)
              first_bad = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                          " c=" + std::to_string(c) + " k=" + std::to_string(k);
          }
        }
  rep.add("qcalc", "zeilberger a,b,c<=" + std::to_string(N) + " (" + std::to_string(total) + " cases)",
          bad == 0, first_bad);
  return rep;
}

}  // namespace awm
