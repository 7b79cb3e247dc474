#include "awm/lattice.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "awm/closed_forms.hpp"
#include "awm/oracle.hpp"
#include "awm/qcalc.hpp"

namespace awm {

namespace {

Mono abq(int ea, int eb, int eq) {
  Mono m;
  m.e[VA] = ea;
  m.e[VB] = eb;
  m.e[VQ] = eq;
  return m;
}

MPoly qpow(long k) { return MPoly::var(VQ, static_cast<int32_t>(k)); }

void check_cap(int v, int cap, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + ": negative size");
  if (v > cap) throw std::invalid_argument(std::string(what) + ": size above cap " + std::to_string(cap));
}

}  // namespace

// ---------------------------------------------------------------------------
// Motzkin paths

bool MotzkinPath::valid() const {
  int h = 0;
  for (const Step& s : steps) {
    switch (s.kind) {
      case StepKind::Up:
        if (s.level != h + 1 || (s.tag != WeightTag::ABQPow && s.tag != WeightTag::MinusOne)) return false;
        ++h;
        break;
      case StepKind::Down:
        if (h < 1 || s.level != h || (s.tag != WeightTag::QPow && s.tag != WeightTag::MinusOne)) return false;
        --h;
        break;
      case StepKind::Horizontal:
        if (s.level != h || (s.tag != WeightTag::AQPow && s.tag != WeightTag::BQPow)) return false;
        break;
    }
  }
  return h == 0;
}

bool MotzkinPath::restricted() const {
  for (size_t i = 0; i + 1 < steps.size(); ++i)
    if (steps[i].kind == StepKind::Up && steps[i].tag == WeightTag::MinusOne &&
        steps[i + 1].kind == StepKind::Down && steps[i + 1].tag == WeightTag::MinusOne)
      return false;
  return true;
}

MPoly step_weight(const Step& s) {
  switch (s.tag) {
    case WeightTag::MinusOne: return MPoly(-1);
    case WeightTag::ABQPow: return MPoly::monomial(abq(1, 1, s.level - 1));
    case WeightTag::QPow: return MPoly::monomial(abq(0, 0, s.level));
    case WeightTag::AQPow: return MPoly::monomial(abq(1, 0, s.level));
    case WeightTag::BQPow: return MPoly::monomial(abq(0, 1, s.level));
  }
  return MPoly();
}

MPoly path_weight(const MotzkinPath& p) {
  MPoly w(1);
  for (const Step& s : p.steps) w = w * step_weight(s);
  return w;
}

namespace {

struct MotzkinWalker {
  int n;
  bool restricted;
  const std::function<void(const MotzkinPath&)>& f;
  MotzkinPath cur;

  void go(int h) {
    int j = static_cast<int>(cur.steps.size());
    if (j == n) {
      f(cur);
      return;
    }
    int rem = n - j;
    bool after_red_up = j > 0 && cur.steps.back().kind == StepKind::Up &&
                        cur.steps.back().tag == WeightTag::MinusOne;
    if (h + 1 <= rem - 1) {
      for (WeightTag t : {WeightTag::ABQPow, WeightTag::MinusOne}) {
        cur.steps.push_back({StepKind::Up, h + 1, t});
        go(h + 1);
        cur.steps.pop_back();
      }
    }
    if (h >= 1) {
      for (WeightTag t : {WeightTag::QPow, WeightTag::MinusOne}) {
        if (restricted && after_red_up && t == WeightTag::MinusOne) continue;
        cur.steps.push_back({StepKind::Down, h, t});
        go(h - 1);
        cur.steps.pop_back();
      }
    }
    if (h <= rem - 1) {
      for (WeightTag t : {WeightTag::AQPow, WeightTag::BQPow}) {
        cur.steps.push_back({StepKind::Horizontal, h, t});
        go(h);
        cur.steps.pop_back();
      }
    }
  }
};

// Same walk, carrying only the running monomial.
struct MotzkinSummer {
  int n;
  bool restricted;
  std::map<std::array<int, 3>, long> acc;

  void go(int j, int h, int ea, int eb, int eq, int sign, bool red_up) {
    if (j == n) {
      acc[{ea, eb, eq}] += sign;
      return;
    }
    int rem = n - j;
    if (h + 1 <= rem - 1) {
      go(j + 1, h + 1, ea + 1, eb + 1, eq + h, sign, false);
      go(j + 1, h + 1, ea, eb, eq, -sign, true);
    }
    if (h >= 1) {
      go(j + 1, h - 1, ea, eb, eq + h, sign, false);
      if (!(restricted && red_up)) go(j + 1, h - 1, ea, eb, eq, -sign, false);
    }
    if (h <= rem - 1) {
      go(j + 1, h, ea + 1, eb, eq + h, sign, false);
      go(j + 1, h, ea, eb + 1, eq + h, sign, false);
    }
  }
};

}  // namespace

void for_each_motzkin(int n, bool restricted, const std::function<void(const MotzkinPath&)>& f) {
  check_cap(n, kMotzkinCap, "enumerate_motzkin");
  MotzkinWalker w{n, restricted, f, {}};
  w.cur.steps.reserve(n);
  w.go(0);
}

std::vector<MotzkinPath> enumerate_motzkin(int n, bool restricted) {
  std::vector<MotzkinPath> out;
  for_each_motzkin(n, restricted, [&](const MotzkinPath& p) { out.push_back(p); });
  return out;
}

MPoly motzkin_sum(int n, bool restricted) {
  check_cap(n, kMotzkinCap, "motzkin_sum");
  MotzkinSummer s{n, restricted, {}};
  s.go(0, 0, 0, 0, 0, 1, false);
  std::vector<MPoly::Term> terms;
  for (const auto& [e, c] : s.acc)
    if (c != 0) terms.emplace_back(abq(e[0], e[1], e[2]), GaussRat(c));
  return MPoly::from_terms(std::move(terms));
}

RatFunc motzkin_moment(int n) { return RatFunc(motzkin_sum(n, false)); }

VerificationReport penaud_check(int n) {
  check_cap(n, 12, "penaud_check");
  MPoly lhs = motzkin_sum(n, false);
  MPoly rhs;
  for (int k = 0; k <= n; ++k) {
    mpz_class c = ballot_diff_variant(n, k);
    if (c != 0) rhs += motzkin_sum(k, true).scaled(GaussRat(c));
  }
  VerificationReport rep;
  rep.add("lattice", "penaud decomposition n=" + std::to_string(n), lhs == rhs,
          lhs == rhs ? "" : "lhs " + lhs.str() + " rhs " + rhs.str());
  return rep;
}

// ---------------------------------------------------------------------------
// doubly striped skew shapes

DSShape::DSShape(int m, int n, std::vector<int> lambda, std::vector<int> mu,
                 std::vector<Stripe> white, std::vector<Stripe> black)
    : m_(m), n_(n), lambda_(std::move(lambda)), mu_(std::move(mu)),
      white_(std::move(white)), black_(std::move(black)) {
  std::sort(white_.begin(), white_.end());
  std::sort(black_.begin(), black_.end());
  validate();
}

bool DSShape::in_skew(int r, int c) const {
  return r >= 1 && r <= m_ && c > mu_[r - 1] && c <= lambda_[r - 1];
}

int DSShape::cells() const {
  int s = 0;
  for (int i = 0; i < m_; ++i) s += lambda_[i] - mu_[i];
  return s;
}

int DSShape::white_dots() const {
  int s = 0;
  for (const auto& st : white_) s += static_cast<int>(st.size());
  return s;
}

int DSShape::black_dots() const {
  int s = 0;
  for (const auto& st : black_) s += static_cast<int>(st.size());
  return s;
}

void DSShape::validate() const {
  auto fail = [](const std::string& why) { throw std::logic_error("illegal shape: " + why); };
  if (m_ < 0 || n_ < 0) fail("negative size");
  if (static_cast<int>(lambda_.size()) != m_ || static_cast<int>(mu_.size()) != m_) fail("row count");
  for (int i = 0; i < m_; ++i) {
    if (mu_[i] < 0 || mu_[i] > lambda_[i] || lambda_[i] > n_) fail("mu <= lambda <= n violated");
    if (i > 0 && (lambda_[i] > lambda_[i - 1] || mu_[i] > mu_[i - 1])) fail("not a partition");
  }
  std::set<Cell> used;
  auto check_stripe = [&](const Stripe& s) {
    if (s.empty()) fail("empty stripe");
    for (size_t i = 0; i < s.size(); ++i) {
      if (!in_skew(s[i].r, s[i].c)) fail("stripe cell outside lambda/mu");
      if (i > 0 && (s[i].r != s[i - 1].r + 1 || s[i].c != s[i - 1].c + 1)) fail("stripe not diagonal");
      if (!used.insert(s[i]).second) fail("two dots in one cell");
    }
  };
  for (const auto& s : white_) {
    check_stripe(s);
    if (in_skew(s.front().r, s.front().c - 1)) fail("white stripe does not start at the left edge");
    if (in_skew(s.back().r + 1, s.back().c)) fail("white stripe does not end at the bottom edge");
  }
  for (const auto& s : black_) {
    check_stripe(s);
    if (in_skew(s.front().r - 1, s.front().c)) fail("black stripe does not start at the top edge");
    if (in_skew(s.back().r, s.back().c + 1)) fail("black stripe does not end at the right edge");
  }
}

bool operator==(const DSShape& x, const DSShape& y) {
  return x.m_ == y.m_ && x.n_ == y.n_ && x.lambda_ == y.lambda_ && x.mu_ == y.mu_ &&
         x.white_ == y.white_ && x.black_ == y.black_;
}

bool operator<(const DSShape& x, const DSShape& y) {
  return std::tie(x.m_, x.n_, x.lambda_, x.mu_, x.white_, x.black_) <
         std::tie(y.m_, y.n_, y.lambda_, y.mu_, y.white_, y.black_);
}

std::string DSShape::str() const {
  std::vector<std::string> rows(m_, std::string(n_, '#'));
  for (int r = 1; r <= m_; ++r)
    for (int c = 1; c <= n_; ++c)
      if (in_skew(r, c)) rows[r - 1][c - 1] = '.';
  for (const auto& s : white_)
    for (const Cell& x : s) rows[x.r - 1][x.c - 1] = 'o';
  for (const auto& s : black_)
    for (const Cell& x : s) rows[x.r - 1][x.c - 1] = '*';
  std::string out;
  for (const auto& r : rows) out += r + "\n";
  return out;
}

namespace {

// all partitions inside the m x n box, rows weakly decreasing
void partitions_in_box(int m, int n, std::vector<int>& cur, const std::vector<int>* cap,
                       std::vector<std::vector<int>>& out) {
  int i = static_cast<int>(cur.size());
  if (i == m) {
    out.push_back(cur);
    return;
  }
  int hi = i == 0 ? n : cur.back();
  if (cap) hi = std::min(hi, (*cap)[i]);
  for (int v = 0; v <= hi; ++v) {
    cur.push_back(v);
    partitions_in_box(m, n, cur, cap, out);
    cur.pop_back();
  }
}

struct Segment {
  Stripe cells;
  bool white_ok, black_ok;
};

// The cells of lambda/mu on a diagonal always form one run, and a stripe
// must be that whole run; only the colour is a choice.
std::vector<Segment> segments(int m, int n, const std::vector<int>& lambda, const std::vector<int>& mu) {
  auto in = [&](int r, int c) { return r >= 1 && r <= m && c > mu[r - 1] && c <= lambda[r - 1]; };
  std::vector<Segment> out;
  for (int d = 1 - m; d <= n - 1; ++d) {
    Stripe run;
    for (int r = 1; r <= m; ++r)
      if (in(r, r + d)) run.push_back({r, r + d});
    if (run.empty()) continue;
    for (size_t i = 1; i < run.size(); ++i)
      if (run[i].r != run[i - 1].r + 1) throw std::logic_error("diagonal of a skew shape is not connected");
    Segment s{run, false, false};
    s.white_ok = !in(run.front().r, run.front().c - 1) && !in(run.back().r + 1, run.back().c);
    s.black_ok = !in(run.front().r - 1, run.front().c) && !in(run.back().r, run.back().c + 1);
    if (s.white_ok || s.black_ok) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<DSShape> enumerate_dss(int m, int n, const DssConstraint& con) {
  // a fixed mu removes most of the freedom, so the box may be larger
  int cap = con.mu ? kDssFixedMuCap : kDssCap;
  check_cap(m, cap, "enumerate_dss");
  check_cap(n, cap, "enumerate_dss");
  check_cap(m + n, cap, "enumerate_dss");
  std::vector<std::vector<int>> lambdas;
  if (con.lambda) {
    lambdas.push_back(*con.lambda);
  } else {
    std::vector<int> cur;
    partitions_in_box(m, n, cur, nullptr, lambdas);
  }
  std::vector<DSShape> out;
  for (const auto& lam : lambdas) {
    if (static_cast<int>(lam.size()) != m) throw std::invalid_argument("enumerate_dss: lambda has wrong length");
    std::vector<std::vector<int>> mus;
    if (con.mu) {
      mus.push_back(*con.mu);
    } else {
      std::vector<int> cur;
      partitions_in_box(m, n, cur, &lam, mus);
    }
    for (const auto& mu : mus) {
      bool inside = static_cast<int>(mu.size()) == m;
      for (int i = 0; inside && i < m; ++i) inside = mu[i] <= lam[i];
      if (!inside) continue;
      auto segs = segments(m, n, lam, mu);
      // colour choices: 0 none, 1 white, 2 black
      std::vector<int> choice(segs.size(), 0);
      for (;;) {
        std::vector<Stripe> W, B;
        for (size_t i = 0; i < segs.size(); ++i) {
          if (choice[i] == 1) W.push_back(segs[i].cells);
          if (choice[i] == 2) B.push_back(segs[i].cells);
        }
        std::sort(W.begin(), W.end());
        std::sort(B.begin(), B.end());
        bool keep = true;
        if (con.white) {
          auto w = *con.white;
          std::sort(w.begin(), w.end());
          keep = keep && w == W;
        }
        if (con.black) {
          auto b = *con.black;
          std::sort(b.begin(), b.end());
          keep = keep && b == B;
        }
        if (keep) out.emplace_back(m, n, lam, mu, std::move(W), std::move(B));
        size_t i = 0;
        for (; i < segs.size(); ++i) {
          int next = choice[i] + 1;
          if (next == 1 && !segs[i].white_ok) ++next;
          if (next == 2 && !segs[i].black_ok) ++next;
          if (next <= 2) {
            choice[i] = next;
            break;
          }
          choice[i] = 0;
        }
        if (i == segs.size()) break;
      }
    }
  }
  return out;
}

RatFunc dss_weight(const DSShape& s, const RatFunc& a, const RatFunc& b) {
  long w = static_cast<long>(s.white().size()), bl = static_cast<long>(s.black().size());
  long e = s.cells() - s.white_dots() - s.black_dots();
  RatFunc q = RatFunc::var(VQ);
  RatFunc r = a.pow(s.m()) * b.pow(s.n()) * RatFunc(qpow(e)) * (q / (a * b)).pow(w);
  if ((w + bl) % 2) r = -r;
  return r;
}

// The path is read as two lattice paths from the bottom-left corner of the
// box: the boundary of mu (U) and the boundary of lambda (L).  Up is U north
// and L east, Down the reverse, horizontal steps move both the same way.
DSShape rho(const MotzkinPath& p) {
  if (!p.valid()) throw std::invalid_argument("rho: not a weighted Motzkin path");
  if (!p.restricted()) throw std::invalid_argument("rho: path has a peak of weight 1");
  int k = static_cast<int>(p.steps.size());
  std::vector<char> U, L;
  for (const Step& s : p.steps) {
    switch (s.kind) {
      case StepKind::Up: U.push_back('N'); L.push_back('E'); break;
      case StepKind::Down: U.push_back('E'); L.push_back('N'); break;
      case StepKind::Horizontal:
        if (s.tag == WeightTag::AQPow) {
          U.push_back('N');
          L.push_back('N');
        } else {
          U.push_back('E');
          L.push_back('E');
        }
        break;
    }
  }
  int m = static_cast<int>(std::count(L.begin(), L.end(), 'N'));
  int n = k - m;
  std::vector<int> lambda(m), mu(m);
  auto trace = [&](const std::vector<char>& P, std::vector<int>& part) {
    int x = 0, y = 0;
    for (char c : P) {
      if (c == 'N') {
        part[m - 1 - y] = x;
        ++y;
      } else {
        ++x;
      }
    }
  };
  trace(L, lambda);
  trace(U, mu);
  std::vector<Stripe> W, B;
  int xu = 0, xl = 0;
  for (int j = 1; j <= k; ++j) {
    const Step& s = p.steps[j - 1];
    if (s.tag == WeightTag::MinusOne) {
      Stripe st;
      int diag = s.kind == StepKind::Up ? j - 1 : j - 2;
      int xend = s.kind == StepKind::Up ? xl : xl - 1;
      for (int X = xu; X <= xend; ++X) st.push_back({m - (diag - X), X + 1});
      (s.kind == StepKind::Up ? W : B).push_back(std::move(st));
    }
    if (U[j - 1] == 'E') ++xu;
    if (L[j - 1] == 'E') ++xl;
  }
  return DSShape(m, n, lambda, mu, W, B);
}

MotzkinPath rho_inverse(const DSShape& s) {
  int m = s.m(), n = s.n(), k = m + n;
  auto boundary = [&](const std::vector<int>& part) {
    std::vector<char> P;
    int prev = 0;
    for (int i = m; i >= 1; --i) {
      for (int x = prev; x < part[i - 1]; ++x) P.push_back('E');
      prev = part[i - 1];
      P.push_back('N');
    }
    for (int x = prev; x < n; ++x) P.push_back('E');
    return P;
  };
  std::vector<char> U = boundary(s.mu()), L = boundary(s.lambda());
  // step index of each stripe from its top-left cell
  std::map<int, const Stripe*> wstep, bstep;
  for (const auto& st : s.white()) wstep[(st.front().c - 1) + (m - st.front().r) + 1] = &st;
  for (const auto& st : s.black()) bstep[(st.front().c - 1) + (m - st.front().r) + 2] = &st;
  MotzkinPath p;
  int h = 0;
  for (int j = 1; j <= k; ++j) {
    char u = U[j - 1], l = L[j - 1];
    if (u == 'N' && l == 'E') {
      ++h;
      p.steps.push_back({StepKind::Up, h, wstep.erase(j) ? WeightTag::MinusOne : WeightTag::ABQPow});
    } else if (u == 'E' && l == 'N') {
      p.steps.push_back({StepKind::Down, h, bstep.erase(j) ? WeightTag::MinusOne : WeightTag::QPow});
      --h;
    } else {
      p.steps.push_back({StepKind::Horizontal, h, u == 'N' ? WeightTag::AQPow : WeightTag::BQPow});
    }
    if (h < 0) throw std::invalid_argument("rho_inverse: boundaries cross");
  }
  if (!wstep.empty() || !bstep.empty()) throw std::invalid_argument("rho_inverse: stripe not attached to a step");
  if (!p.valid() || !p.restricted()) throw std::invalid_argument("rho_inverse: shape not in the image of rho");
  return p;
}

bool is_psi_fixed(const DSShape& s) {
  return s.black().empty() && std::all_of(s.mu().begin(), s.mu().end(), [](int v) { return v == 0; });
}

DSShape kim_involution(const DSShape& s) {
  if (!s.white().empty()) throw std::invalid_argument("kim_involution: shape has white stripes");
  return extended_involution(s);
}

DSShape extended_involution(const DSShape& s) {
  int m = s.m();
  std::vector<int> lambda = s.lambda(), mu = s.mu();
  std::vector<Stripe> W = s.white(), B = s.black();
  int r = 0;
  for (int i = 0; i < m; ++i)
    if (mu[i] > 0) r = i + 1;
  int srow = 0;
  for (const auto& st : B) srow = std::max(srow, st.back().r);
  if (r == 0 && srow == 0) return s;

  if (srow >= r) {
    // Case 1: fold the black stripe through row s into mu
    auto it = B.end();
    for (auto b = B.begin(); b != B.end(); ++b)
      for (const Cell& x : *b)
        if (x.r == srow) {
          if (it != B.end()) throw std::logic_error("psi: two black stripes meet the lowest black row");
          it = b;
        }
    std::set<Cell> added;
    for (const Cell& x : *it) {
      mu[x.r - 1] += 1;
      added.insert({x.r, mu[x.r - 1]});
    }
    B.erase(it);
    std::vector<size_t> hit;
    for (size_t i = 0; i < W.size(); ++i)
      if (added.count(W[i].front())) hit.push_back(i);
    std::sort(hit.begin(), hit.end(), [&](size_t x, size_t y) { return W[x].front().r < W[y].front().r; });
    for (size_t i : hit) {
      Stripe& st = W[i];
      for (Cell& x : st) x.c += 1;
      Cell& last = st.back();
      if (last.c > lambda[last.r - 1]) {
        if (lambda[last.r - 1] != last.c - 1) throw std::logic_error("psi: slide cannot drop a cell");
        lambda[last.r - 1] -= 1;
        st.pop_back();
        if (st.empty()) throw std::logic_error("psi: slide emptied a white stripe");
      }
    }
  } else {
    // Case 2: peel the last cells of the bottom t rows of mu into a black stripe
    std::set<Cell> occupied;
    for (const auto& st : B)
      for (const Cell& x : st) occupied.insert(x);
    int found = 0;
    for (int t = 1; t <= r && !found; ++t) {
      std::vector<int> nmu = mu;
      for (int row = r - t + 1; row <= r; ++row) nmu[row - 1] -= 1;
      auto in = [&](int rr, int cc) {
        return rr >= 1 && rr <= m && cc > nmu[rr - 1] && cc <= lambda[rr - 1];
      };
      bool ok = true;
      Stripe st;
      for (int i = 0; i < t && ok; ++i) {
        Cell x{r - t + 1 + i, lambda[r - 1] - t + 1 + i};
        ok = in(x.r, x.c) && !occupied.count(x);
        st.push_back(x);
      }
      ok = ok && !in(st.front().r - 1, st.front().c);
      if (ok) found = t;
    }
    if (!found) throw std::logic_error("psi: no admissible stripe size in case 2");
    int t = found;
    std::set<Cell> freed;
    for (int row = r - t + 1; row <= r; ++row) {
      freed.insert({row, mu[row - 1]});
      mu[row - 1] -= 1;
    }
    Stripe nb;
    for (int i = 0; i < t; ++i) nb.push_back({r - t + 1 + i, lambda[r - 1] - t + 1 + i});
    B.push_back(nb);
    std::vector<size_t> hit;
    for (size_t i = 0; i < W.size(); ++i) {
      Cell f = W[i].front();
      if (freed.count({f.r, f.c - 1})) hit.push_back(i);
    }
    std::sort(hit.begin(), hit.end(), [&](size_t x, size_t y) { return W[x].front().r > W[y].front().r; });
    for (size_t i : hit) {
      Stripe& st = W[i];
      for (Cell& x : st) x.c -= 1;
      Cell last = st.back();
      if (last.r < m && lambda[last.r] >= last.c && mu[last.r] < last.c) {
        if (lambda[last.r] != last.c) throw std::logic_error("psi: slide cannot restore a cell");
        lambda[last.r] += 1;
        st.push_back({last.r + 1, last.c + 1});
      }
    }
  }
  return DSShape(m, s.n(), lambda, mu, W, B);
}

DSShape dss_rotate(const DSShape& s) {
  int m = s.m(), n = s.n();
  std::vector<int> lambda(m), mu(m);
  for (int i = 0; i < m; ++i) {
    lambda[i] = n - s.mu()[m - 1 - i];
    mu[i] = n - s.lambda()[m - 1 - i];
  }
  auto turn = [&](const std::vector<Stripe>& v) {
    std::vector<Stripe> out;
    for (const auto& st : v) {
      Stripe t;
      for (auto it = st.rbegin(); it != st.rend(); ++it) t.push_back({m + 1 - it->r, n + 1 - it->c});
      out.push_back(std::move(t));
    }
    return out;
  };
  return DSShape(m, n, lambda, mu, turn(s.black()), turn(s.white()));
}

std::string dss_to_word(const DSShape& s) {
  if (!is_psi_fixed(s)) throw std::invalid_argument("dss_to_word: needs mu and B empty");
  int m = s.m(), n = s.n();
  std::set<int> marked, chopped;
  for (const auto& st : s.white()) {
    marked.insert(st.front().r);
    chopped.insert(st.back().c);
  }
  int v = n - static_cast<int>(chopped.size());
  std::vector<int> len(m + 2, 0);
  for (int i = 1; i <= m; ++i)
    for (int c = 1; c <= s.lambda()[i - 1]; ++c)
      if (!chopped.count(c)) ++len[i];
  std::string w;
  for (int i = m; i >= 1; --i) {
    w.append(len[i] - len[i + 1], '2');
    w.push_back(marked.count(i) ? '1' : '0');
  }
  w.append(v - len[1], '2');
  return w;
}

long word_inversions(const std::string& w) {
  long inv = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

MPoly mot_star_rhs(int k) {
  MPoly out;
  for (int t = 0; 2 * t <= k; ++t)
    for (int u = 0; u + 2 * t <= k; ++u) {
      int v = k - 2 * t - u;
      MPoly term = q_multinomial(u + v + t, {u, v, t}).shifted(abq(u, v, t * (t + 1) / 2));
      if (t % 2) term = -term;
      out += term;
    }
  return out;
}

MPoly mot_star_rhs_bqa(int k) {
  MPoly out;
  for (int i = 0; i <= k; ++i) out += MPoly::monomial(abq(2 * i - k, 0, k + i * (k - i - 1)));
  return out;
}

// ---------------------------------------------------------------------------
// matchings

std::vector<std::vector<int>> Matching::blocks() const {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= n; ++i) {
    if (partner[i] == i) out.push_back({i});
    else if (partner[i] > i) out.push_back({i, partner[i]});
  }
  return out;
}

int Matching::fixed_points() const {
  int f = 0;
  for (int i = 1; i <= n; ++i) f += partner[i] == i;
  return f;
}

int crossing(const Matching& pi) {
  int cro = 0;
  for (int i1 = 1; i1 <= pi.n; ++i1) {
    int j1 = pi.partner[i1];
    if (j1 <= i1) continue;
    for (int x = i1 + 1; x < j1; ++x) {
      int y = pi.partner[x];
      if (y == x || y > j1) ++cro;  // nested fixed point, or a crossing edge
    }
  }
  return cro;
}

namespace {

// block[i] is the group of point i; points of a nonzero group may only be
// joined to points of another group.  Group 0 is unrestricted.
void matchings_rec(int n, std::vector<int>& partner, int fixed_left, bool complete,
                   const std::vector<int>* group, const std::function<void(const Matching&)>& f) {
  int i = 1;
  while (i <= n && partner[i] != 0) ++i;
  if (i > n) {
    if (fixed_left == 0 || fixed_left < 0) f(Matching{n, partner});
    return;
  }
  if (!complete && fixed_left != 0) {
    partner[i] = i;
    matchings_rec(n, partner, fixed_left - 1, complete, group, f);
    partner[i] = 0;
  }
  for (int j = i + 1; j <= n; ++j) {
    if (partner[j] != 0) continue;
    if (group && (*group)[i] != 0 && (*group)[i] == (*group)[j]) continue;
    partner[i] = j;
    partner[j] = i;
    matchings_rec(n, partner, fixed_left, complete, group, f);
    partner[i] = partner[j] = 0;
  }
}

}  // namespace

std::vector<Matching> enumerate_matchings(int n, std::optional<int> fixed_points) {
  check_cap(n, kMatchingCap, "enumerate_matchings");
  std::vector<Matching> out;
  if (fixed_points && (*fixed_points < 0 || *fixed_points > n || (n - *fixed_points) % 2)) return out;
  std::vector<int> partner(n + 1, 0);
  // fixed_left < 0 means any number of fixed points
  matchings_rec(n, partner, fixed_points ? *fixed_points : -1, false, nullptr,
                [&](const Matching& m) { out.push_back(m); });
  return out;
}

MPoly p_poly(int n, int m) {
  std::vector<long> cnt;
  for (const Matching& pi : enumerate_matchings(n, m)) {
    int c = crossing(pi);
    if (static_cast<int>(cnt.size()) <= c) cnt.resize(c + 1, 0);
    ++cnt[c];
  }
  MPoly out;
  for (size_t c = 0; c < cnt.size(); ++c)
    if (cnt[c]) out += qpow(static_cast<long>(c)).scaled(GaussRat(cnt[c]));
  return out;
}

MPoly cm_genfunc(int n0, int n1, int n2, int n3, int n4) {
  for (int v : {n0, n1, n2, n3, n4})
    if (v < 0) throw std::invalid_argument("cm_genfunc: negative block size");
  int N = n0 + n1 + n2 + n3 + n4;
  check_cap(N, kMatchingCap, "cm_genfunc");
  if (N % 2) return MPoly();
  std::vector<int> group(N + 1, 0);
  int pos = n0 + 1;
  int g = 1;
  for (int sz : {n1, n2, n3, n4}) {
    for (int i = 0; i < sz; ++i) group[pos++] = g;
    ++g;
  }
  std::vector<long> cnt;
  std::vector<int> partner(N + 1, 0);
  matchings_rec(N, partner, 0, true, &group, [&](const Matching& pi) {
    int c = crossing(pi);
    if (static_cast<int>(cnt.size()) <= c) cnt.resize(c + 1, 0);
    ++cnt[c];
  });
  MPoly out;
  for (size_t c = 0; c < cnt.size(); ++c)
    if (cnt[c]) out += qpow(static_cast<long>(c)).scaled(GaussRat(cnt[c]));
  return out;
}

MPoly partial_matching_moment(int n) {
  MPoly one_minus_q = MPoly(1) - qpow(1);
  MPoly out;
  for (int k = n % 2; k <= n; k += 2) {
    MPoly inner = p_poly(n, k) * one_minus_q.pow((n - k) / 2);
    for (int u = 0; u <= k; ++u) out += (q_binomial(k, u) * inner).shifted(abq(u, k - u, 0));
  }
  return out;
}

RatFunc matching_main_moment(int n) {
  MPoly a = MPoly::var(VA), b = MPoly::var(VB), c = MPoly::var(VC), d = MPoly::var(VD);
  MPoly one_minus_q = MPoly(1) - qpow(1);
  RatSum sum;
  for (int k = n % 2; k <= n; k += 2) {
    MPoly pb = p_poly(n, k) * one_minus_q.pow((n - k) / 2);
    for (int al = 0; al <= k; ++al)
      for (int be = 0; al + be <= k; ++be)
        for (int ga = 0; al + be + ga <= k; ++ga) {
          int de = k - al - be - ga;
          Factors f;
          Mono mono;
          mono.e[VA] = al;
          mono.e[VB] = be;
          mono.e[VC] = ga;
          mono.e[VD] = de;
          f.mono(mono);
          f.mul(pb);
          f.mul(q_multinomial(k, {al, be, ga, de}));
          poch_into(f, a * d, be + ga, false);
          poch_into(f, a * c, be, false);
          poch_into(f, b * d, ga, false);
          poch_into(f, a * b * c * d, be + ga, true);
          sum.add(f.build());
        }
  }
  return sum.total();
}

// ---------------------------------------------------------------------------
// JSON

namespace {
const char* kind_name(StepKind k) {
  switch (k) {
    case StepKind::Up: return "U";
    case StepKind::Down: return "D";
    case StepKind::Horizontal: return "H";
  }
  return "?";
}

nlohmann::json stripes_json(const std::vector<Stripe>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& st : v) {
    nlohmann::json s = nlohmann::json::array();
    for (const Cell& x : st) s.push_back({x.r, x.c});
    out.push_back(s);
  }
  return out;
}
}  // namespace

nlohmann::json to_json(const MotzkinPath& p) {
  nlohmann::json steps = nlohmann::json::array();
  for (const Step& s : p.steps)
    steps.push_back({{"kind", kind_name(s.kind)}, {"level", s.level}, {"weight", step_weight(s).str()}});
  return {{"steps", steps}, {"weight", path_weight(p).str()}};
}

nlohmann::json to_json(const DSShape& s) {
  nlohmann::json rows = nlohmann::json::array();
  std::istringstream in(s.str());
  std::string line;
  while (std::getline(in, line)) rows.push_back(line);
  return {{"m", s.m()},
          {"n", s.n()},
          {"lambda", s.lambda()},
          {"mu", s.mu()},
          {"white", stripes_json(s.white())},
          {"black", stripes_json(s.black())},
          {"cells", rows},
          {"weight", dss_weight(s).str()}};
}

nlohmann::json to_json(const Matching& m) {
  return {{"n", m.n}, {"blocks", m.blocks()}, {"crossings", crossing(m)}};
}

// ---------------------------------------------------------------------------
// checks

namespace {

const std::string S = "lattice";
std::string num(long v) { return std::to_string(v); }

RatFunc scaled_cd0_moment(int n) {
  static std::mutex mu;
  static std::vector<RatFunc> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<int>(cache.size()) <= n) {
    AWParams p0;
    p0.c = RatFunc(0);
    p0.d = RatFunc(0);
    cache = aw_moments(p0, std::max(n, 10));
  }
  return cache[n] * RatFunc(MPoly(GaussRat(mpz_class(mpz_class(1) << n))));
}

}  // namespace

VerificationReport motzkin_checks(int n_paths) {
  VerificationReport rep;
  for (int n = 0; n <= n_paths; ++n) {
    RatFunc lhs = motzkin_moment(n);
    RatFunc rhs = scaled_cd0_moment(n);
    rep.add(S, "motzkin sum = 2^n mu_n(a,b,0,0) n=" + num(n), ratfunc_equal(lhs, rhs));
    rep.merge(penaud_check(n));
  }
  return rep;
}

VerificationReport dss_checks(int k_shapes) {
  VerificationReport rep;
  for (int k = 0; k <= k_shapes; ++k) {
    std::vector<DSShape> all;
    MPoly dsum;
    for (int i = 0; i <= k; ++i)
      for (auto& s : enumerate_dss(i, k - i)) {
        dsum += dss_weight(s).to_polynomial();
        all.push_back(std::move(s));
      }
    MPoly msum = motzkin_sum(k, true);
    rep.add(S, "Mot* sum = DSS sum k=" + num(k), msum == dsum);
    bool bij = true;
    std::vector<DSShape> img;
    std::string why;
    for_each_motzkin(k, true, [&](const MotzkinPath& p) {
      if (!bij) return;
      DSShape s = rho(p);
      if (dss_weight(s).to_polynomial() != path_weight(p)) {
        bij = false;
        why = "weight differs";
      } else if (!(rho_inverse(s) == p)) {
        bij = false;
        why = "rho_inverse does not undo rho";
      }
      img.push_back(std::move(s));
    });
    if (bij) {
      std::sort(img.begin(), img.end());
      std::sort(all.begin(), all.end());
      bij = img == all;
      if (!bij) why = "image differs from the enumerated shapes";
    }
    rep.add(S, "rho weight-preserving bijection k=" + num(k), bij, why);
    rep.add(S, "DSS sum closed form k=" + num(k), dsum == mot_star_rhs(k));
    RatSum bsum;
    for (const auto& s : all) bsum.add(dss_weight(s, RatFunc::var(VA), RatFunc::var(VQ) / RatFunc::var(VA)));
    rep.add(S, "DSS sum at b=q/a k=" + num(k), ratfunc_equal(bsum.total(), RatFunc(mot_star_rhs_bqa(k))));
  }
  return rep;
}

VerificationReport involution_checks(int mn_invol) {
  VerificationReport rep;
  for (int mn = 0; mn <= mn_invol; ++mn)
    for (int m = 0; m <= mn; ++m) {
      int n = mn - m;
      bool inv = true, rot = true;
      std::string why;
      MPoly fixsum, allsum;
      std::map<std::vector<int>, MPoly> kim_by_lambda;
      for (const auto& s : enumerate_dss(m, n)) {
        MPoly w = dss_weight(s).to_polynomial();
        allsum += w;
        DSShape t = extended_involution(s);
        if (is_psi_fixed(s)) {
          fixsum += w;
          if (t != s) inv = false, why = "fixed shape moved";
        } else if (t == s) {
          inv = false, why = "non-fixed shape fixed:\n" + s.str();
        } else if (extended_involution(t) != s) {
          inv = false, why = "not an involution at\n" + s.str();
        } else if (dss_weight(t).to_polynomial() != -w) {
          inv = false, why = "not sign-reversing at\n" + s.str();
        }
        if (s.white().empty()) kim_by_lambda[s.lambda()] += w;
        DSShape r = dss_rotate(s);
        long e = static_cast<long>(s.white().size()) - static_cast<long>(s.black().size());
        RatFunc rel = dss_weight(r) * (RatFunc::var(VQ) / (RatFunc::var(VA) * RatFunc::var(VB))).pow(e);
        RatFunc a = RatFunc::var(VA), qa = RatFunc::var(VQ) / RatFunc::var(VA);
        if (!ratfunc_equal(dss_weight(s), rel) || !ratfunc_equal(dss_weight(s, a, qa), dss_weight(r, a, qa)) ||
            dss_rotate(r) != s)
          rot = false;
      }
      std::string tag = " m=" + num(m) + " n=" + num(n);
      rep.add(S, "psi sign-reversing involution" + tag, inv, why);
      rep.add(S, "psi fixed points carry the sum" + tag, allsum == fixsum);
      bool kim = true;
      for (const auto& [lam, w] : kim_by_lambda) {
        long sz = 0;
        for (int v : lam) sz += v;
        if (w != MPoly::monomial(abq(m, n, static_cast<int>(sz)))) kim = false;
      }
      rep.add(S, "Kim sum over fixed lambda" + tag, kim);
      rep.add(S, "rotation weight relation" + tag, rot);
    }
  return rep;
}

VerificationReport word_checks(int max_total) {
  VerificationReport rep;
  for (int total = 0; total <= max_total; ++total)
    for (int t = 0; t <= total; ++t)
      for (int u = 0; u + t <= total; ++u) {
        int v = total - t - u;
        std::set<std::string> words;
        MPoly sum;
        bool ok = true;
        DssConstraint con;
        con.mu = std::vector<int>(u + t, 0);
        con.black = std::vector<Stripe>{};
        for (const auto& s : enumerate_dss(u + t, v + t, con)) {
          if (static_cast<int>(s.white().size()) != t) continue;
          std::string w = dss_to_word(s);
          long lhs = s.cells() - s.white_dots();
          ok = ok && std::count(w.begin(), w.end(), '0') == u && std::count(w.begin(), w.end(), '1') == t &&
               std::count(w.begin(), w.end(), '2') == v && lhs == word_inversions(w) + t * (t - 1) / 2;
          ok = ok && words.insert(w).second;
          sum += qpow(lhs);
        }
        ok = ok && words.size() == binom(u + v + t, u).get_ui() * binom(v + t, v).get_ui();
        ok = ok && sum == q_multinomial(u + v + t, {u, v, t}).shifted(abq(0, 0, t * (t - 1) / 2));
        rep.add(S, "word bijection u=" + num(u) + " v=" + num(v) + " t=" + num(t), ok);
      }
  return rep;
}

VerificationReport matching_checks(int n_match) {
  VerificationReport rep;
  for (int n = 0; n <= n_match; ++n) {
    bool ok = true;
    for (int m = n % 2; m <= n; m += 2) {
      MPoly pb = p_poly(n, m) * (MPoly(1) - qpow(1)).pow((n - m) / 2);
      ok = ok && pb == op_bar(n, m);
    }
    rep.add(S, "crossing polynomials vs closed form n=" + num(n), ok);
  }
  for (int n = 0; n <= std::min(n_match, 8); ++n) {
    RatFunc rhs = scaled_cd0_moment(n);
    rep.add(S, "partial matchings rebuild 2^n mu_n(a,b,0,0) n=" + num(n),
            ratfunc_equal(RatFunc(partial_matching_moment(n)), rhs));
  }
  auto full = aw_moments(AWParams{}, 3);
  for (int n = 0; n <= 3; ++n)
    rep.add(S, "four-parameter matching formula n=" + num(n),
            ratfunc_equal(matching_main_moment(n), full[n] * RatFunc(1L << n)));
  bool cm = cm_genfunc(0, 1, 1, 0, 0) == MPoly(1) && cm_genfunc(2, 0, 0, 0, 0) == MPoly(1);
  for (int k = 0; k <= 4; ++k) cm = cm && cm_genfunc(0, k, k, 0, 0) == q_factorial(k);
  for (int n = 0; n <= std::min(n_match, 10); n += 2) cm = cm && cm_genfunc(n, 0, 0, 0, 0) == p_poly(n, 0);
  rep.add(S, "restricted complete matchings sanity", cm);
  return rep;
}

VerificationReport lattice_checks(int n_paths, int k_shapes, int mn_invol, int n_match) {
  VerificationReport rep;
  rep.merge(motzkin_checks(n_paths));
  rep.merge(dss_checks(k_shapes));
  rep.merge(involution_checks(mn_invol));
  rep.merge(word_checks(6));
  rep.merge(matching_checks(n_match));
  return rep;
}

}  // namespace awm
