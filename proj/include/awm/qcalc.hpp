#pragma once

#include <vector>

#include "awm/arith.hpp"
#include "awm/report.hpp"

namespace awm {

// The base x of the q-symbols.  Usually q, sometimes q^2 or A^2.
class QCtx {
 public:
  explicit QCtx(MPoly base);
  static QCtx q();
  static QCtx q2();
  const MPoly& base() const { return base_; }
  MPoly power(long k) const;  // base^k, cached for monomial bases

 private:
  MPoly base_;
};

// integer coefficient vector of a polynomial in the base
using UPoly = std::vector<mpz_class>;
MPoly lift(const UPoly& u, const QCtx& ctx);

mpz_class binom(long n, long k);  // 0 outside 0<=k<=n
mpz_class factorial(long n);
mpz_class double_factorial_odd(long n);  // (2n-1)(2n-3)...1

MPoly q_int(long n, const QCtx& ctx = QCtx::q());
MPoly q_factorial(long n, const QCtx& ctx = QCtx::q());
MPoly q_double_factorial_even(long i, const QCtx& ctx = QCtx::q());  // [2][4]...[2i]

// (x; base)_n expanded
MPoly q_pochhammer(const MPoly& x, long n, const QCtx& ctx = QCtx::q());
// multiply (or divide) a factor builder by (x; base)_n without expanding
void poch_into(Factors& f, const MPoly& x, long n, bool divide, const QCtx& ctx = QCtx::q());

// extended convention: zero when k<0, k>n or n<0
MPoly q_binomial(long n, long k, const QCtx& ctx = QCtx::q());
const UPoly& q_binomial_coeffs(long n, long k);
MPoly q_multinomial(long n, const std::vector<long>& parts, const QCtx& ctx = QCtx::q());

mpz_class ballot_diff(long n, long s);          // C(n,s) - C(n,s-1)
mpz_class ballot_diff_variant(long n, long k);  // s = (n-k)/2, 0 for odd n-k
mpz_class catalan_half(const mpq_class& x);     // Cat(m) for integer m >= 0, else 0
mpz_class narayana(long n, long k);

VerificationReport identity_checks(int N);

}  // namespace awm
