#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace awm {

// Element of Q(i).  Almost every coefficient met in practice is a machine
// integer, so that case is stored inline; everything else lives in a pair
// of GMP rationals.  A value representable inline is never stored big.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(int v) : s_(v) {}
  GaussRat(long v) : s_(v) {}
  GaussRat(const mpz_class& v);
  GaussRat(const mpq_class& re, const mpq_class& im = mpq_class(0));
  template <class T, class U>
  GaussRat(const __gmp_expr<T, U>& e) : GaussRat(mpq_class(e)) {}
  GaussRat(const GaussRat& o) : s_(o.s_), b_(o.b_ ? new Big(*o.b_) : nullptr) {}
  GaussRat(GaussRat&&) noexcept = default;
  GaussRat& operator=(const GaussRat& o) {
    if (this != &o) {
      s_ = o.s_;
      b_.reset(o.b_ ? new Big(*o.b_) : nullptr);
    }
    return *this;
  }
  GaussRat& operator=(GaussRat&&) noexcept = default;

  static GaussRat I() { return GaussRat(mpq_class(0), mpq_class(1)); }
  static GaussRat parse(const std::string& re, const std::string& im = "0");

  bool is_zero() const { return !b_ && s_ == 0; }
  bool is_one() const { return !b_ && s_ == 1; }
  bool is_real() const { return !b_ || sgn(b_->im) == 0; }
  bool is_integer() const { return !b_ || (sgn(b_->im) == 0 && b_->re.get_den() == 1); }
  bool is_small() const { return !b_; }
  int64_t small() const { return s_; }
  int sign_re() const { return b_ ? sgn(b_->re) : (s_ > 0) - (s_ < 0); }
  mpq_class re() const { return b_ ? b_->re : mpq_class(static_cast<long>(s_)); }
  mpq_class im() const { return b_ ? b_->im : mpq_class(0); }

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);
  GaussRat operator-() const;
  GaussRat inverse() const;
  GaussRat pow(long k) const;

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    if (!a.b_ && !b.b_) return a.s_ == b.s_;
    if (!a.b_ || !b.b_) return false;
    return a.b_->re == b.b_->re && a.b_->im == b.b_->im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
  friend int compare(const GaussRat& a, const GaussRat& b);  // some total order

  std::string str() const;

 private:
  struct Big {
    mpq_class re, im;
  };
  void set_big(mpq_class re, mpq_class im);
  int64_t s_ = 0;
  std::unique_ptr<Big> b_;
};

// Variable universe.  The order of the enum is the order a<b<c<d<q<y<t<A
// used by the canonical term order.
enum Var : int { VA = 0, VB, VC, VD, VQ, VY, VT, VAA };
constexpr int kNumVars = 8;
constexpr int32_t kMaxExponent = 1000000;

const char* var_name(int v);
int var_index(std::string_view name);  // throws std::invalid_argument

struct Mono {
  std::array<int32_t, kNumVars> e{};

  static Mono var(int v, int32_t p = 1);
  bool is_one() const;
  int64_t degree() const;
  Mono operator*(const Mono& o) const;
  Mono inverse() const;
  Mono pow(long k) const;
  bool divides(const Mono& o) const;  // o / this has no negative exponent
  bool nonneg() const;
  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
  friend bool operator!=(const Mono& a, const Mono& b) { return a.e != b.e; }
  std::string str() const;
};

struct MonoHash {
  size_t operator()(const Mono& m) const noexcept;
};

// Graded lexicographic order, A the most significant variable.
bool grlex_less(const Mono& x, const Mono& y);

using Point = std::map<int, GaussRat>;

class MPoly {
 public:
  using Term = std::pair<Mono, GaussRat>;

  MPoly() = default;
  MPoly(long c);
  MPoly(const GaussRat& c);
  static MPoly var(int v, int32_t p = 1);
  static MPoly monomial(const Mono& m, const GaussRat& c = GaussRat(1));
  static MPoly from_terms(std::vector<Term> terms);
  // terms already strictly decreasing with nonzero coefficients
  static MPoly from_canonical(std::vector<Term> terms) {
    MPoly r;
    r.terms_ = std::move(terms);
    return r;
  }

  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& lead() const { return terms_.front(); }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
  friend bool operator<(const MPoly& a, const MPoly& b);

  MPoly pow(long k) const;  // negative k only for monomials
  MPoly scaled(const GaussRat& c) const;
  MPoly shifted(const Mono& m) const;  // multiply by a monomial

  GaussRat coefficient(const Mono& m) const;
  Mono min_exponents() const;
  Mono max_exponents() const;
  int32_t max_exp(int v) const;
  int32_t min_exp(int v) const;
  bool is_real() const;
  GaussRat coeff_sum() const;
  GaussRat eval(const Point& pt) const;  // unbound variables must not occur

  // Exact quotient by d, or nullopt if d does not divide *this in the
  // Laurent ring.  d must have no monomial content.
  std::optional<MPoly> exact_div(const MPoly& d) const;

  std::string str() const;

 private:
  std::vector<Term> terms_;  // strictly decreasing in grlex order
};

// p = unit * atom, where unit is a monomial term and atom has no monomial
// content and leading coefficient 1.  For a monomial p, atom is 1.
struct UnitAtom {
  GaussRat coef;
  Mono mono;
  MPoly atom;
};
UnitAtom split_unit(const MPoly& p);

using DenMap = std::map<MPoly, int>;

class RatFunc;
using Bindings = std::map<int, RatFunc>;

// num / prod(atom^e).  Denominators are kept factored into atoms; this is
// what keeps four-variable sums tractable without a multivariate gcd.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long c) : num_(c) {}
  RatFunc(const GaussRat& c) : num_(c) {}
  RatFunc(MPoly p) : num_(std::move(p)) {}
  static RatFunc var(int v, int32_t p = 1) { return RatFunc(MPoly::var(v, p)); }
  static RatFunc from_parts(MPoly num, DenMap den);
  static RatFunc from_factors(const std::vector<MPoly>& num, const std::vector<MPoly>& den);

  const MPoly& numerator() const { return num_; }
  const DenMap& den_atoms() const { return den_; }
  MPoly denominator() const;  // expanded
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc pow(long k) const;
  RatFunc inverse() const;

  // Cancel denominator atoms that divide the numerator.
  RatFunc reduced() const;
  // Reduced numerator; throws if a denominator survives.
  MPoly to_polynomial() const;

  RatFunc substitute(const Bindings& b) const;
  GaussRat eval(const Point& pt) const;
  bool is_real() const;

  std::string str() const;

 private:
  MPoly num_;
  DenMap den_;
};

bool ratfunc_equal(const RatFunc& a, const RatFunc& b);
GaussRat extract_coefficient(const MPoly& p, const Mono& m);

// Groups summands by denominator so that only one lcm is formed at the end.
class RatSum {
 public:
  void add(const RatFunc& r);
  void add(const RatFunc& r, const GaussRat& c);
  RatFunc total(bool reduce = true) const;

 private:
  std::map<DenMap, MPoly> groups_;
};

// Builder for a product of factors with atom-level cancellation.
class Factors {
 public:
  Factors() = default;
  explicit Factors(const GaussRat& c) : coef_(c) {}
  Factors& scale(const GaussRat& c);
  Factors& mono(const Mono& m);
  Factors& mul(const MPoly& p);
  Factors& mul(const RatFunc& r);
  Factors& div(const MPoly& p);
  Factors& div(const RatFunc& r);
  bool is_zero() const { return zero_; }
  RatFunc build() const;

 private:
  void add_den(const MPoly& p, int e);
  GaussRat coef_ = GaussRat(1);
  Mono mono_{};
  bool zero_ = false;
  std::vector<MPoly> num_;
  DenMap den_;
};

nlohmann::json to_json(const MPoly& p);
nlohmann::json to_json(const RatFunc& r);
MPoly mpoly_from_json(const nlohmann::json& j);
RatFunc ratfunc_from_json(const nlohmann::json& j);

}  // namespace awm
