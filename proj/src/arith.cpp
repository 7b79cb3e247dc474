#include "awm/arith.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace awm {

// ---------------------------------------------------------------- GaussRat

GaussRat::GaussRat(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t()))
    s_ = v.get_si();
  else
    set_big(mpq_class(v), mpq_class(0));
}

GaussRat::GaussRat(const mpq_class& re, const mpq_class& im) {
  mpq_class r = re, i = im;
  r.canonicalize();
  i.canonicalize();
  set_big(std::move(r), std::move(i));
}

// demotes to the inline form whenever possible
void GaussRat::set_big(mpq_class re, mpq_class im) {
  if (sgn(im) == 0 && re.get_den() == 1 && mpz_fits_slong_p(re.get_num_mpz_t())) {
    s_ = re.get_num().get_si();
    b_.reset();
    return;
  }
  s_ = 0;
  if (b_) {
    b_->re = std::move(re);
    b_->im = std::move(im);
  } else {
    b_.reset(new Big{std::move(re), std::move(im)});
  }
}

GaussRat GaussRat::parse(const std::string& r, const std::string& i) {
  mpq_class re, im;
  if (re.set_str(r, 10) != 0 || im.set_str(i, 10) != 0)
    throw std::invalid_argument("bad rational '" + r + "', '" + i + "'");
  if (re.get_den() == 0 || im.get_den() == 0) throw std::invalid_argument("zero denominator");
  return GaussRat(re, im);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  int64_t r;
  if (!b_ && !o.b_ && !__builtin_add_overflow(s_, o.s_, &r)) {
    s_ = r;
    return *this;
  }
  set_big(re() + o.re(), im() + o.im());
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  int64_t r;
  if (!b_ && !o.b_ && !__builtin_sub_overflow(s_, o.s_, &r)) {
    s_ = r;
    return *this;
  }
  set_big(re() - o.re(), im() - o.im());
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  int64_t r;
  if (!b_ && !o.b_) {
    if (!__builtin_mul_overflow(s_, o.s_, &r)) {
      s_ = r;
      return *this;
    }
    set_big(re() * o.re(), mpq_class(0));
    return *this;
  }
  mpq_class a = re(), b = im(), c = o.re(), d = o.im();
  if (sgn(b) == 0 && sgn(d) == 0)
    set_big(a * c, mpq_class(0));
  else
    set_big(a * c - b * d, a * d + b * c);
  return *this;
}

GaussRat GaussRat::operator-() const {
  if (!b_ && s_ != INT64_MIN) return GaussRat(static_cast<long>(-s_));
  return GaussRat(mpq_class(-re()), mpq_class(-im()));
}

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (!b_ && (s_ == 1 || s_ == -1)) return *this;
  mpq_class a = re(), b = im();
  if (sgn(b) == 0) return GaussRat(mpq_class(1 / a));
  mpq_class n = a * a + b * b;
  return GaussRat(mpq_class(a / n), mpq_class(-b / n));
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (!b_ && !o.b_ && o.s_ != -1 && s_ % o.s_ == 0) {
    s_ /= o.s_;
    return *this;
  }
  return *this *= o.inverse();
}

GaussRat GaussRat::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  GaussRat r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

int compare(const GaussRat& a, const GaussRat& b) {
  if (!a.b_ && !b.b_) return (a.s_ > b.s_) - (a.s_ < b.s_);
  if (int c = cmp(a.re(), b.re())) return c;
  return cmp(a.im(), b.im());
}

std::string GaussRat::str() const {
  if (!b_) return std::to_string(s_);
  const mpq_class& re = b_->re;
  const mpq_class& im = b_->im;
  if (sgn(im) == 0) return re.get_str();
  if (sgn(re) == 0) return im.get_str() + "*i";
  std::string s = "(" + re.get_str();
  if (sgn(im) > 0) s += "+";
  return s + im.get_str() + "*i)";
}

// ---------------------------------------------------------------- Mono

static const char* kVarNames[kNumVars] = {"a", "b", "c", "d", "q", "y", "t", "A"};

const char* var_name(int v) { return kVarNames[v]; }

int var_index(std::string_view name) {
  for (int v = 0; v < kNumVars; ++v)
    if (name == kVarNames[v]) return v;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

static int32_t checked(int64_t x) {
  if (x > kMaxExponent || x < -kMaxExponent)
    throw std::overflow_error("exponent overflow: |" + std::to_string(x) + "| > 10^6");
  return static_cast<int32_t>(x);
}

Mono Mono::var(int v, int32_t p) {
  Mono m;
  m.e[v] = checked(p);
  return m;
}

bool Mono::is_one() const {
  for (auto x : e)
    if (x) return false;
  return true;
}

int64_t Mono::degree() const {
  int64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

Mono Mono::operator*(const Mono& o) const {
  Mono r;
  bool bad = false;
  for (int i = 0; i < kNumVars; ++i) {
    int32_t s = e[i] + o.e[i];  // |e| <= 10^6, cannot wrap
    bad |= s > kMaxExponent || s < -kMaxExponent;
    r.e[i] = s;
  }
  if (bad) [[unlikely]]
    for (int i = 0; i < kNumVars; ++i) checked(int64_t(e[i]) + o.e[i]);
  return r;
}

Mono Mono::inverse() const {
  Mono r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = -e[i];
  return r;
}

Mono Mono::pow(long k) const {
  Mono r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = checked(int64_t(e[i]) * k);
  return r;
}

bool Mono::divides(const Mono& o) const {
  for (int i = 0; i < kNumVars; ++i)
    if (o.e[i] < e[i]) return false;
  return true;
}

bool Mono::nonneg() const {
  for (auto x : e)
    if (x < 0) return false;
  return true;
}

std::string Mono::str() const {
  std::string s;
  for (int v = 0; v < kNumVars; ++v) {
    if (!e[v]) continue;
    if (!s.empty()) s += "*";
    s += kVarNames[v];
    if (e[v] != 1) s += "^" + std::to_string(e[v]);
  }
  return s.empty() ? "1" : s;
}

size_t MonoHash::operator()(const Mono& m) const noexcept {
  uint64_t h = 1469598103934665603ull;
  for (auto x : m.e) {
    h ^= static_cast<uint32_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

bool grlex_less(const Mono& x, const Mono& y) {
  int64_t dx = x.degree(), dy = y.degree();
  if (dx != dy) return dx < dy;
  for (int v = kNumVars - 1; v >= 0; --v)
    if (x.e[v] != y.e[v]) return x.e[v] < y.e[v];
  return false;
}

namespace {
struct GrlexDesc {
  bool operator()(const Mono& x, const Mono& y) const { return grlex_less(y, x); }
};
}  // namespace

// ---------------------------------------------------------------- MPoly

MPoly::MPoly(long c) {
  if (c) terms_.emplace_back(Mono{}, GaussRat(c));
}

MPoly::MPoly(const GaussRat& c) {
  if (!c.is_zero()) terms_.emplace_back(Mono{}, c);
}

MPoly MPoly::var(int v, int32_t p) { return monomial(Mono::var(v, p)); }

MPoly MPoly::monomial(const Mono& m, const GaussRat& c) {
  MPoly r;
  if (!c.is_zero()) r.terms_.emplace_back(m, c);
  return r;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grlex_less(y.first, x.first); });
  MPoly r;
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
      if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.terms().begin(), ie = a.terms().end();
  auto j = b.terms().begin(), je = b.terms().end();
  while (i != ie || j != je) {
    if (j == je || (i != ie && grlex_less(j->first, i->first))) {
      out.push_back(*i++);
    } else if (i == ie || grlex_less(i->first, j->first)) {
      out.emplace_back(j->first, subtract ? -j->second : j->second);
      ++j;
    } else {
      GaussRat c = subtract ? i->second - j->second : i->second + j->second;
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return MPoly::from_canonical(std::move(out));
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return merge(a, b, false);
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) return a;
  return merge(a, b, true);
}

MPoly& MPoly::operator+=(const MPoly& o) { return *this = *this + o; }
MPoly& MPoly::operator-=(const MPoly& o) { return *this = *this - o; }

MPoly MPoly::scaled(const GaussRat& c) const {
  if (c.is_zero()) return MPoly();
  if (c.is_one()) return *this;
  MPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

MPoly MPoly::shifted(const Mono& m) const {
  if (m.is_one()) return *this;
  MPoly r = *this;
  for (auto& t : r.terms_) t.first = t.first * m;
  return r;  // grlex is a monomial order, so the ordering survives
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  if (a.size() == 1) return b.shifted(a.terms_[0].first).scaled(a.terms_[0].second);
  if (b.size() == 1) return a.shifted(b.terms_[0].first).scaled(b.terms_[0].second);
  const MPoly& big = a.size() >= b.size() ? a : b;
  const MPoly& small = a.size() >= b.size() ? b : a;
  std::unordered_map<Mono, GaussRat, MonoHash> acc;
  acc.reserve(big.size() * small.size() * 2);
  GaussRat tmp;
  for (const auto& s : small.terms_) {
    for (const auto& t : big.terms_) {
      tmp = s.second;
      tmp *= t.second;
      auto [it, fresh] = acc.try_emplace(s.first * t.first, tmp);
      if (!fresh) it->second += tmp;
    }
  }
  std::vector<MPoly::Term> out;
  out.reserve(acc.size());
  for (auto& kv : acc)
    if (!kv.second.is_zero()) out.emplace_back(kv.first, std::move(kv.second));
  std::sort(out.begin(), out.end(), [](const MPoly::Term& x, const MPoly::Term& y) {
    return grlex_less(y.first, x.first);
  });
  MPoly r;
  r.terms_ = std::move(out);
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second)
      return false;
  return true;
}

bool operator<(const MPoly& a, const MPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.first != y.first) return x.first.e < y.first.e;
    if (int c = compare(x.second, y.second)) return c < 0;
  }
  return false;
}

MPoly MPoly::pow(long k) const {
  if (k < 0) {
    if (!is_monomial()) throw std::domain_error("not invertible");
    return monomial(terms_[0].first.pow(k), terms_[0].second.pow(k));
  }
  if (is_monomial()) return monomial(terms_[0].first.pow(k), terms_[0].second.pow(k));
  MPoly r(1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

GaussRat MPoly::coefficient(const Mono& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Mono& x) {
    return grlex_less(x, t.first);
  });
  if (it != terms_.end() && it->first == m) return it->second;
  return GaussRat(0);
}

Mono MPoly::min_exponents() const {
  Mono m;
  if (terms_.empty()) return m;
  m = terms_[0].first;
  for (const auto& t : terms_)
    for (int v = 0; v < kNumVars; ++v) m.e[v] = std::min(m.e[v], t.first.e[v]);
  return m;
}

Mono MPoly::max_exponents() const {
  Mono m;
  if (terms_.empty()) return m;
  m = terms_[0].first;
  for (const auto& t : terms_)
    for (int v = 0; v < kNumVars; ++v) m.e[v] = std::max(m.e[v], t.first.e[v]);
  return m;
}

int32_t MPoly::max_exp(int v) const { return max_exponents().e[v]; }
int32_t MPoly::min_exp(int v) const { return min_exponents().e[v]; }

bool MPoly::is_real() const {
  for (const auto& t : terms_)
    if (!t.second.is_real()) return false;
  return true;
}

GaussRat MPoly::coeff_sum() const {
  GaussRat s(0);
  for (const auto& t : terms_) s += t.second;
  return s;
}

GaussRat MPoly::eval(const Point& pt) const {
  std::map<std::pair<int, int32_t>, GaussRat> cache;
  GaussRat s(0);
  for (const auto& t : terms_) {
    GaussRat x = t.second;
    for (int v = 0; v < kNumVars; ++v) {
      int32_t k = t.first.e[v];
      if (!k) continue;
      auto key = std::make_pair(v, k);
      auto it = cache.find(key);
      if (it == cache.end()) {
        auto p = pt.find(v);
        if (p == pt.end())
          throw std::invalid_argument(std::string("no value for variable ") + var_name(v));
        if (k < 0 && p->second.is_zero()) throw std::domain_error("singular evaluation");
        it = cache.emplace(key, p->second.pow(k)).first;
      }
      x *= it->second;
    }
    s += x;
  }
  return s;
}

std::optional<MPoly> MPoly::exact_div(const MPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (is_zero()) return MPoly();
  if (d.is_monomial())
    return shifted(d.lead().first.inverse()).scaled(d.lead().second.inverse());
  Mono sn = min_exponents().inverse(), sd = d.min_exponents().inverse();
  MPoly n = shifted(sn), dd = d.shifted(sd);
  const Mono ld = dd.lead().first;
  const GaussRat lc_inv = dd.lead().second.inverse();
  // a quotient of a polynomial by a polynomial cannot exceed these bounds
  Mono nmax = n.max_exponents(), dmax = dd.max_exponents();
  for (int v = 0; v < kNumVars; ++v)
    if (dmax.e[v] > nmax.e[v]) return std::nullopt;
  std::map<Mono, GaussRat, GrlexDesc> rem;
  for (const auto& t : n.terms_) rem.emplace_hint(rem.end(), t.first, t.second);
  std::vector<Term> quot;
  GaussRat tmp;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!ld.divides(it->first)) return std::nullopt;
    Mono qm = it->first * ld.inverse();
    GaussRat qc = it->second * lc_inv;
    rem.erase(it);
    for (size_t k = 1; k < dd.terms_.size(); ++k) {
      const auto& t = dd.terms_[k];
      tmp = qc;
      tmp *= t.second;
      Mono m = qm * t.first;
      auto [jt, fresh] = rem.try_emplace(m, -tmp);
      if (!fresh) {
        jt->second -= tmp;
        if (jt->second.is_zero()) rem.erase(jt);
      }
    }
    quot.emplace_back(qm, std::move(qc));
  }
  MPoly q;
  q.terms_ = std::move(quot);
  return q.shifted(sn.inverse() * sd);
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = c.str();
    bool neg = c.is_real() && c.sign_re() < 0;
    if (neg) cs = (-c).str();
    if (s.empty())
      s = neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (m.is_one())
      s += cs;
    else if (cs == "1")
      s += m.str();
    else
      s += cs + "*" + m.str();
  }
  return s;
}

UnitAtom split_unit(const MPoly& p) {
  if (p.is_zero()) throw std::domain_error("division by zero");
  UnitAtom u;
  if (p.is_monomial()) {
    u.coef = p.lead().second;
    u.mono = p.lead().first;
    u.atom = MPoly(1);
    return u;
  }
  u.mono = p.min_exponents();
  MPoly s = p.shifted(u.mono.inverse());
  u.coef = s.lead().second;
  u.atom = s.scaled(u.coef.inverse());
  return u;
}

// ---------------------------------------------------------------- RatFunc

RatFunc RatFunc::from_parts(MPoly num, DenMap den) {
  RatFunc r;
  if (num.is_zero()) return r;
  GaussRat c(1);
  Mono m;
  for (auto& [p, e] : den) {
    if (e == 0) continue;
    UnitAtom u = split_unit(p);
    c *= u.coef.pow(e);
    m = m * u.mono.pow(e);
    if (!u.atom.is_constant()) r.den_[u.atom] += e;
  }
  for (auto it = r.den_.begin(); it != r.den_.end();) {
    if (it->second < 0) throw std::logic_error("negative denominator exponent");
    it = it->second == 0 ? r.den_.erase(it) : std::next(it);
  }
  r.num_ = num.shifted(m.inverse()).scaled(c.inverse());
  return r;
}

RatFunc RatFunc::from_factors(const std::vector<MPoly>& num, const std::vector<MPoly>& den) {
  Factors f;
  for (const auto& p : num) f.mul(p);
  for (const auto& p : den) f.div(p);
  return f.build();
}

static MPoly expand(const DenMap& d) {
  MPoly r(1);
  for (const auto& [a, e] : d) r = r * a.pow(e);
  return r;
}

MPoly RatFunc::denominator() const { return expand(den_); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

// Combine numerators over the lcm of the given denominators.
static RatFunc combine(const std::vector<std::pair<const DenMap*, MPoly>>& parts) {
  DenMap lcm;
  for (const auto& [d, n] : parts) {
    if (n.is_zero()) continue;
    for (const auto& [a, e] : *d) {
      int& x = lcm[a];
      x = std::max(x, e);
    }
  }
  MPoly total;
  for (const auto& [d, n] : parts) {
    if (n.is_zero()) continue;
    MPoly f = n;
    for (const auto& [a, e] : lcm) {
      auto it = d->find(a);
      int have = it == d->end() ? 0 : it->second;
      if (e > have) f = f * a.pow(e - have);
    }
    total += f;
  }
  if (total.is_zero()) return RatFunc();
  return RatFunc::from_parts(std::move(total), std::move(lcm));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    RatFunc r;
    r.num_ = a.num_ + b.num_;
    if (!r.num_.is_zero()) r.den_ = a.den_;
    return r;
  }
  return combine({{&a.den_, a.num_}, {&b.den_, b.num_}});
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

static void try_cancel(MPoly& n, DenMap& den) {
  if (den.empty() || n.size() < 2 || n.size() > 24) return;
  UnitAtom u = split_unit(n);
  auto it = den.find(u.atom);
  if (it == den.end()) return;
  n = MPoly::monomial(u.mono, u.coef);
  if (--it->second == 0) den.erase(it);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  RatFunc r;
  r.den_ = a.den_;
  for (const auto& [x, e] : b.den_) r.den_[x] += e;
  MPoly na = a.num_, nb = b.num_;
  try_cancel(na, r.den_);
  try_cancel(nb, r.den_);
  r.num_ = na * nb;
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero()) return RatFunc();
  UnitAtom u = split_unit(b.num_);
  RatFunc r;
  r.den_ = a.den_;
  MPoly num = a.num_;
  if (!u.atom.is_constant()) r.den_[u.atom] += 1;
  for (const auto& [x, e] : b.den_) {
    auto it = r.den_.find(x);
    int k = e;
    if (it != r.den_.end()) {
      int c = std::min(k, it->second);
      it->second -= c;
      k -= c;
      if (it->second == 0) r.den_.erase(it);
    }
    if (k) num = num * x.pow(k);
  }
  try_cancel(num, r.den_);
  r.num_ = num.shifted(u.mono.inverse()).scaled(u.coef.inverse());
  return r;
}

RatFunc RatFunc::inverse() const { return RatFunc(1) / *this; }

RatFunc RatFunc::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  if (k == 0) return RatFunc(1);
  RatFunc r;
  r.num_ = num_.pow(k);
  for (const auto& [x, e] : den_) r.den_[x] = static_cast<int>(e * k);
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

RatFunc RatFunc::reduced() const {
  if (den_.empty()) return *this;
  RatFunc r = *this;
  for (auto it = r.den_.begin(); it != r.den_.end();) {
    while (it->second > 0) {
      auto q = r.num_.exact_div(it->first);
      if (!q) break;
      r.num_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? r.den_.erase(it) : std::next(it);
  }
  return r;
}

MPoly RatFunc::to_polynomial() const {
  RatFunc r = reduced();
  if (!r.den_.empty()) throw std::domain_error("not a polynomial: denominator " + expand(r.den_).str());
  return r.num_;
}

namespace {

struct VarPlan {
  int v = 0;
  bool light = true;
  bool zero = false;
  GaussRat c;
  Mono m;
  // heavy binding P / R, P = unit * atomP
  MPoly P, Rexp, atomP;
  GaussRat uc;
  Mono um;
  DenMap R;
  int eplus = 0, eminus = 0;
  std::map<int, MPoly> cache;

  const MPoly& f(int e) {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    MPoly r;
    if (e >= 0) {
      r = P.pow(e) * Rexp.pow(eplus - e) * atomP.pow(eminus);
    } else {
      int k = -e;
      r = (Rexp.pow(k + eplus) * atomP.pow(eminus - k)).shifted(um.pow(-k)).scaled(uc.pow(-k));
    }
    return cache.emplace(e, std::move(r)).first->second;
  }
};

RatFunc subst_poly(const MPoly& p, const Bindings& b) {
  std::vector<VarPlan> plans;
  Mono lo = p.min_exponents(), hi = p.max_exponents();
  for (const auto& [v, val] : b) {
    if (lo.e[v] == 0 && hi.e[v] == 0) continue;
    VarPlan pl;
    pl.v = v;
    if (val.is_zero()) {
      pl.zero = true;
    } else if (val.is_polynomial() && val.numerator().is_monomial()) {
      pl.c = val.numerator().lead().second;
      pl.m = val.numerator().lead().first;
    } else {
      pl.light = false;
      pl.P = val.numerator();
      pl.R = val.den_atoms();
      pl.Rexp = expand(pl.R);
      UnitAtom u = split_unit(pl.P);
      pl.uc = u.coef;
      pl.um = u.mono;
      pl.atomP = u.atom;
      pl.eplus = std::max(0, hi.e[v]);
      pl.eminus = std::max(0, -lo.e[v]);
    }
    plans.push_back(std::move(pl));
  }
  if (plans.empty()) return RatFunc(p);

  std::vector<int> heavy;
  for (size_t i = 0; i < plans.size(); ++i)
    if (!plans[i].light) heavy.push_back(static_cast<int>(i));

  std::map<std::vector<int>, std::vector<MPoly::Term>> groups;
  for (const auto& [m0, c0] : p.terms()) {
    Mono m = m0;
    GaussRat c = c0;
    std::vector<int> key;
    bool vanish = false;
    for (auto& pl : plans) m.e[pl.v] = 0;
    for (auto& pl : plans) {
      int e = m0.e[pl.v];
      if (!pl.light) {
        key.push_back(e);
        continue;
      }
      if (e == 0) continue;
      if (pl.zero) {
        if (e < 0) throw std::domain_error("singular specialization");
        vanish = true;
        break;
      }
      c *= pl.c.pow(e);
      m = m * pl.m.pow(e);
    }
    if (!vanish) groups[key].emplace_back(m, c);
  }

  MPoly num;
  for (auto& [key, terms] : groups) {
    MPoly rest = MPoly::from_terms(std::move(terms));
    for (size_t i = 0; i < heavy.size(); ++i) rest = rest * plans[heavy[i]].f(key[i]);
    num += rest;
  }
  DenMap den;
  for (int i : heavy) {
    auto& pl = plans[i];
    for (const auto& [a, e] : pl.R) den[a] += e * pl.eplus;
    if (!pl.atomP.is_constant() && pl.eminus) den[pl.atomP] += pl.eminus;
  }
  return RatFunc::from_parts(std::move(num), std::move(den));
}

}  // namespace

RatFunc RatFunc::substitute(const Bindings& b) const {
  RatFunc r = subst_poly(num_, b);
  for (const auto& [a, e] : den_) {
    RatFunc s = subst_poly(a, b);
    if (s.is_zero()) throw std::domain_error("singular specialization");
    r = r / s.pow(e);
  }
  return r;
}

GaussRat RatFunc::eval(const Point& pt) const {
  GaussRat v = num_.eval(pt);
  for (const auto& [a, e] : den_) {
    GaussRat d = a.eval(pt);
    if (d.is_zero()) throw std::domain_error("singular evaluation");
    v /= d.pow(e);
  }
  return v;
}

bool RatFunc::is_real() const {
  if (!num_.is_real()) return false;
  for (const auto& [a, e] : den_)
    if (!a.is_real()) return false;
  return true;
}

std::string RatFunc::str() const {
  if (den_.empty()) return num_.str();
  std::string s = "(" + num_.str() + ")/(";
  bool first = true;
  for (const auto& [a, e] : den_) {
    if (!first) s += "*";
    first = false;
    s += "(" + a.str() + ")";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s + ")";
}

bool ratfunc_equal(const RatFunc& a, const RatFunc& b) { return (a - b).is_zero(); }

GaussRat extract_coefficient(const MPoly& p, const Mono& m) { return p.coefficient(m); }

// ---------------------------------------------------------------- RatSum

void RatSum::add(const RatFunc& r) {
  if (r.is_zero()) return;
  auto it = groups_.find(r.den_atoms());
  if (it == groups_.end())
    groups_.emplace(r.den_atoms(), r.numerator());
  else
    it->second += r.numerator();
}

void RatSum::add(const RatFunc& r, const GaussRat& c) {
  if (c.is_zero() || r.is_zero()) return;
  auto it = groups_.find(r.den_atoms());
  MPoly n = r.numerator().scaled(c);
  if (it == groups_.end())
    groups_.emplace(r.den_atoms(), std::move(n));
  else
    it->second += n;
}

RatFunc RatSum::total(bool reduce) const {
  std::vector<std::pair<const DenMap*, MPoly>> parts;
  for (const auto& [d, n] : groups_) parts.emplace_back(&d, n);
  RatFunc r = combine(parts);
  return reduce ? r.reduced() : r;
}

// ---------------------------------------------------------------- Factors

Factors& Factors::scale(const GaussRat& c) {
  if (c.is_zero()) zero_ = true;
  else coef_ *= c;
  return *this;
}

Factors& Factors::mono(const Mono& m) {
  mono_ = mono_ * m;
  return *this;
}

Factors& Factors::mul(const MPoly& p) {
  if (zero_) return *this;
  if (p.is_zero()) {
    zero_ = true;
    return *this;
  }
  UnitAtom u = split_unit(p);
  coef_ *= u.coef;
  mono_ = mono_ * u.mono;
  if (u.atom.is_constant()) return *this;
  auto it = den_.find(u.atom);
  if (it != den_.end()) {
    if (--it->second == 0) den_.erase(it);
  } else {
    num_.push_back(std::move(u.atom));
  }
  return *this;
}

Factors& Factors::mul(const RatFunc& r) {
  if (zero_) return *this;
  mul(r.numerator());
  for (const auto& [a, e] : r.den_atoms()) add_den(a, e);
  return *this;
}

void Factors::add_den(const MPoly& atom, int e) {
  for (auto it = num_.begin(); it != num_.end() && e > 0;) {
    if (*it == atom) {
      it = num_.erase(it);
      --e;
    } else {
      ++it;
    }
  }
  if (e > 0) den_[atom] += e;
}

Factors& Factors::div(const MPoly& p) {
  if (p.is_zero()) throw std::domain_error("division by zero");
  if (zero_) return *this;
  UnitAtom u = split_unit(p);
  coef_ /= u.coef;
  mono_ = mono_ * u.mono.inverse();
  if (!u.atom.is_constant()) add_den(u.atom, 1);
  return *this;
}

Factors& Factors::div(const RatFunc& r) {
  if (zero_) return div(r.numerator());
  div(r.numerator());
  for (const auto& [a, e] : r.den_atoms())
    for (int k = 0; k < e; ++k) mul(a);
  return *this;
}

RatFunc Factors::build() const {
  if (zero_) return RatFunc();
  std::vector<const MPoly*> order;
  for (const auto& p : num_) order.push_back(&p);
  std::sort(order.begin(), order.end(), [](auto x, auto y) { return x->size() < y->size(); });
  MPoly n = MPoly::monomial(mono_, coef_);
  for (auto p : order) n = n * *p;
  return RatFunc::from_parts(std::move(n), den_);
}

// ---------------------------------------------------------------- JSON

nlohmann::json to_json(const MPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json ex = nlohmann::json::object();
    for (int v = 0; v < kNumVars; ++v)
      if (m.e[v]) ex[var_name(v)] = m.e[v];
    arr.push_back({{"exponents", ex}, {"re", c.re().get_str()}, {"im", c.im().get_str()}});
  }
  return arr;
}

nlohmann::json to_json(const RatFunc& r) {
  return {{"num", to_json(r.numerator())}, {"den", to_json(r.denominator())}};
}

MPoly mpoly_from_json(const nlohmann::json& j) {
  std::vector<MPoly::Term> terms;
  for (const auto& t : j) {
    Mono m;
    for (auto it = t.at("exponents").begin(); it != t.at("exponents").end(); ++it)
      m.e[var_index(it.key())] = it.value().get<int32_t>();
    terms.emplace_back(m, GaussRat::parse(t.at("re").get<std::string>(), t.at("im").get<std::string>()));
  }
  return MPoly::from_terms(std::move(terms));
}

RatFunc ratfunc_from_json(const nlohmann::json& j) {
  MPoly den = mpoly_from_json(j.at("den"));
  return RatFunc::from_parts(mpoly_from_json(j.at("num")), DenMap{{den, 1}});
}

}  // namespace awm
