#include "awm/staircase.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>

#include "awm/oracle.hpp"
#include "awm/qcalc.hpp"

namespace awm {

namespace {

// Cat(x) for x = num/2
mpz_class cat_half(long num) {
  mpq_class x(num, 2);
  x.canonicalize();
  return catalan_half(x);
}

void check_cap(int n, int cap, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative size");
  if (n > cap) throw std::invalid_argument(std::string(what) + ": size above cap " + std::to_string(cap));
}

bool is_ag(char c) { return c == 'a' || c == 'g'; }
bool is_bd(char c) { return c == 'b' || c == 'd'; }

// label of an empty cell from the letters at RIGHT(s) and BELOW(s)
char label_of(char right, char below) {
  if (right == 'b') return 'u';
  if (right == 'd') return 'q';
  return (below == 'a' || below == 'd') ? 'u' : 'q';
}

void count_letter(TableauStats& s, char c, int sgn) {
  switch (c) {
    case 'a': s.A += sgn; break;
    case 'b': s.B += sgn; break;
    case 'g': s.C += sgn; break;
    case 'd': s.D += sgn; break;
  }
}

const std::vector<RatFunc>& generic_moments(long n) {
  static std::mutex mu;
  static std::vector<RatFunc> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<long>(cache.size()) <= n) cache = aw_moments(AWParams{}, std::max<long>(n, 6));
  return cache;
}

MPoly scaled_moment_poly(long n) {
  Factors f{GaussRat(mpz_class(mpz_class(1) << n))};
  f.mul(generic_moments(n)[n]);
  poch_into(f, MPoly::var(VA) * MPoly::var(VB) * MPoly::var(VC) * MPoly::var(VD), n, false);
  return f.build().to_polynomial();
}

}  // namespace

StaircaseTableau StaircaseTableau::from_rows(const std::vector<std::string>& rows) {
  StaircaseTableau t;
  t.n = static_cast<int>(rows.size());
  for (int i = 1; i <= t.n; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != t.n + 1 - i) throw std::invalid_argument("from_rows: not a staircase");
    t.cells += rows[i - 1];
  }
  return t;
}

std::vector<std::string> StaircaseTableau::rows() const {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(cells.substr(offset(n, i), n + 1 - i));
  return out;
}

bool StaircaseTableau::legal() const {
  for (int i = 1; i <= n; ++i) {
    if (at(i, n + 1 - i) == '.') return false;
    for (int j = 1; j <= n + 1 - i; ++j) {
      char c = at(i, j);
      if (c == '.') continue;
      if (c != 'a' && c != 'b' && c != 'g' && c != 'd') return false;
      if (is_ag(c))
        for (int r = 1; r < i; ++r)
          if (at(r, j) != '.') return false;
      if (is_bd(c))
        for (int k = 1; k < j; ++k)
          if (at(i, k) != '.') return false;
    }
  }
  return true;
}

std::vector<std::string> label_cells(const StaircaseTableau& t) {
  if (!t.legal()) throw std::invalid_argument("label_cells: not a staircase tableau");
  std::vector<std::string> out = t.rows();
  for (int i = 1; i <= t.n; ++i)
    for (int j = 1; j <= t.n + 1 - i; ++j) {
      if (t.at(i, j) != '.') continue;
      char right = 0, below = 0;
      for (int k = j + 1; k <= t.n + 1 - i && !right; ++k)
        if (t.at(i, k) != '.') right = t.at(i, k);
      for (int r = i + 1; r <= t.n + 1 - j && !below; ++r)
        if (t.at(r, j) != '.') below = t.at(r, j);
      // each rule on its own, to make the uniqueness visible
      int fired = 0;
      char lab = 0;
      if (right == 'b') ++fired, lab = 'u';
      if (right == 'd') ++fired, lab = 'q';
      if (is_ag(right) && (below == 'a' || below == 'd')) ++fired, lab = 'u';
      if (is_ag(right) && (below == 'b' || below == 'g')) ++fired, lab = 'q';
      if (fired != 1) throw std::logic_error("label_cells: labeling not unique");
      out[i - 1][j - 1] = lab;
    }
  return out;
}

TableauStats stats(const StaircaseTableau& t) {
  TableauStats s;
  auto lab = label_cells(t);
  for (int i = 1; i <= t.n; ++i)
    for (int j = 1; j <= t.n + 1 - i; ++j) {
      char c = t.at(i, j);
      count_letter(s, c, 1);
      if (c == '.' && lab[i - 1][j - 1] == 'q') ++s.E;
      if (j == t.n + 1 - i && (c == 'a' || c == 'd')) ++s.blk;
    }
  return s;
}

namespace {

// Cells are filled column by column from the right, each column from the
// bottom up, so RIGHT(s) and BELOW(s) are known when s is reached.
struct StairWalker {
  int n;
  const std::function<void(const StaircaseTableau&, const TableauStats&)>& f;
  std::vector<std::pair<int, int>> order;
  std::vector<char> right;  // per row
  StaircaseTableau t;
  TableauStats s;

  void go(size_t k, char below) {
    if (k == order.size()) {
      f(t, s);
      return;
    }
    auto [i, j] = order[k];
    bool diag = j == n + 1 - i;
    if (diag) below = 0;
    char& cell = t.at(i, j);
    if (!diag) {
      char lab = label_of(right[i], below);
      if (lab == 'q') ++s.E;
      go(k + 1, below);
      if (lab == 'q') --s.E;
      if (is_bd(right[i]) || is_ag(below)) return;
    }
    char saved = right[i];
    for (char c : {'a', 'b', 'g', 'd'}) {
      cell = c;
      right[i] = c;
      count_letter(s, c, 1);
      bool b = diag && (c == 'a' || c == 'd');
      if (b) ++s.blk;
      go(k + 1, c);
      if (b) --s.blk;
      count_letter(s, c, -1);
    }
    right[i] = saved;
    cell = '.';
  }
};

}  // namespace

void for_each_staircase(int n, const std::function<void(const StaircaseTableau&, const TableauStats&)>& f) {
  check_cap(n, kStaircaseCap, "for_each_staircase");
  StairWalker w{n, f, {}, std::vector<char>(n + 1, 0), {}, {}};
  w.t.n = n;
  w.t.cells.assign(n * (n + 1) / 2, '.');
  for (int j = n; j >= 1; --j)
    for (int i = n + 1 - j; i >= 1; --i) w.order.push_back({i, j});
  w.go(0, 0);
}

std::vector<StaircaseTableau> enumerate_staircase(int n) {
  check_cap(n, kStaircaseListCap, "enumerate_staircase");
  std::vector<StaircaseTableau> out;
  for_each_staircase(n, [&](const StaircaseTableau& t, const TableauStats&) { out.push_back(t); });
  return out;
}

std::map<TableauStats, int64_t> stats_histogram(int n) {
  check_cap(n, kStaircaseCap, "stats_histogram");
  static std::mutex mu;
  static std::map<int, std::map<TableauStats, int64_t>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::map<TableauStats, int64_t> h;
  for_each_staircase(n, [&](const StaircaseTableau&, const TableauStats& s) { ++h[s]; });
  std::lock_guard<std::mutex> lock(mu);
  cache[n] = h;
  return h;
}

MPoly z_partition(int n) {
  std::vector<MPoly::Term> terms;
  for (const auto& [s, c] : stats_histogram(n)) {
    Mono m;
    m.e[VY] = s.blk;
    m.e[VA] = s.A;
    m.e[VB] = s.B;
    m.e[VC] = s.C;
    m.e[VD] = s.D;
    m.e[VQ] = s.E;
    terms.emplace_back(m, GaussRat(mpz_class(static_cast<long>(c))));
  }
  return MPoly::from_terms(std::move(terms));
}

namespace {

struct Sample {
  GaussRat a, b, c, d, q;
};

std::vector<Sample> sample_points(int count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(2, 13);
  auto rat = [&]() {
    int p = 0;
    while (p == 0) p = num(rng);
    return GaussRat(mpq_class(p, den(rng)));
  };
  std::vector<Sample> out;
  out.push_back({GaussRat(mpq_class(1, 2)), GaussRat(mpq_class(1, 3)), GaussRat(mpq_class(1, 5)),
                 GaussRat(mpq_class(1, 7)), GaussRat(mpq_class(1, 11))});
  while (static_cast<int>(out.size()) < count) {
    Sample s{rat(), rat(), rat(), rat(), rat()};
    GaussRat abcd = s.a * s.b * s.c * s.d;
    // keep away from q = 1 and from abcd q^j = 1
    bool bad = s.q == GaussRat(1);
    GaussRat p = abcd;
    for (int j = 0; j < 8; ++j, p *= s.q) bad = bad || p == GaussRat(1);
    if (!bad) out.push_back(s);
  }
  return out;
}

Point to_point(const Sample& s) { return {{VA, s.a}, {VB, s.b}, {VC, s.c}, {VD, s.d}, {VQ, s.q}}; }

std::string sample_str(const Sample& s) {
  return "(a,b,c,d,q)=(" + s.a.str() + "," + s.b.str() + "," + s.c.str() + "," + s.d.str() + "," + s.q.str() + ")";
}

}  // namespace

VerificationReport tableau_moment_check(int n, int points, uint64_t seed) {
  VerificationReport rep;
  auto hist = stats_histogram(n);
  const GaussRat I = GaussRat::I(), one(1);
  for (const Sample& s : sample_points(points, seed)) {
    GaussRat pa = (one + s.a * I) * (one + s.c * I), pb = (one - s.b * I) * (one - s.d * I);
    GaussRat al = (one - s.q) / pa, be = (one - s.q) / pb;
    GaussRat ga = s.a * s.c * (one - s.q) / pa, de = s.b * s.d * (one - s.q) / pb;
    GaussRat z(0);
    for (const auto& [st, c] : hist) {
      GaussRat term = al.pow(st.A) * be.pow(st.B) * ga.pow(st.C) * de.pow(st.D) * s.q.pow(st.E);
      if (st.blk % 2) term = -term;
      z += term * GaussRat(mpz_class(static_cast<long>(c)));
    }
    GaussRat den = GaussRat(mpz_class(mpz_class(1) << n)) * I.pow(n);
    for (int j = 0; j < n; ++j) den *= al * be - ga * de * s.q.pow(j);
    GaussRat lhs = (one - s.q).pow(n) * z / den;
    GaussRat rhs = generic_moments(n)[n].eval(to_point(s));
    bool ok = lhs == rhs && lhs.is_real();
    rep.add("staircase", "CSSW moment identity n=" + std::to_string(n) + " " + sample_str(s), ok,
            ok ? "" : "staircase side " + lhs.str() + ", oracle " + rhs.str());
  }
  return rep;
}

VerificationReport imaginary_moment_check(int n, int points, uint64_t seed) {
  VerificationReport rep;
  auto hist = stats_histogram(n);
  const GaussRat I = GaussRat::I(), one(1);
  for (const Sample& s : sample_points(points, seed)) {
    GaussRat pa = (one + s.a * I) * (one + s.c * I), pb = (one - s.b * I) * (one - s.d * I);
    GaussRat sum(0);
    for (const auto& [st, c] : hist) {
      GaussRat term = (one - s.q).pow(st.A + st.B + st.C + st.D - n) * s.q.pow(st.E) * (s.a * s.c).pow(st.C) *
                      (s.b * s.d).pow(st.D) * pa.pow(n - st.A - st.C) * pb.pow(n - st.B - st.D);
      if (st.blk % 2) term = -term;
      sum += term * GaussRat(mpz_class(static_cast<long>(c)));
    }
    sum *= I.pow(-n);
    GaussRat rhs = GaussRat(mpz_class(mpz_class(1) << n)) * generic_moments(n)[n].eval(to_point(s));
    GaussRat abcd = s.a * s.b * s.c * s.d;
    for (int j = 0; j < n; ++j) rhs *= one - abcd * s.q.pow(j);
    bool ok = sum == rhs && sum.is_real();
    rep.add("staircase", "imaginary-unit moment identity n=" + std::to_string(n) + " " + sample_str(s), ok,
            ok ? "" : "tableau side " + sum.str() + ", oracle " + rhs.str());
  }
  return rep;
}

VerificationReport imaginary_moment_symbolic_check(int n) {
  const MPoly I(GaussRat::I()), one(1);
  MPoly a = MPoly::var(VA), b = MPoly::var(VB), c = MPoly::var(VC), d = MPoly::var(VD), q = MPoly::var(VQ);
  MPoly pa = (one + a * I) * (one + c * I), pb = (one - b * I) * (one - d * I);
  MPoly sum;
  for (const auto& [st, cnt] : stats_histogram(n)) {
    MPoly term = (one - q).pow(st.A + st.B + st.C + st.D - n) * q.pow(st.E) * (a * c).pow(st.C) *
                 (b * d).pow(st.D) * pa.pow(n - st.A - st.C) * pb.pow(n - st.B - st.D);
    sum += term.scaled(GaussRat(mpz_class(static_cast<long>(cnt)) * (st.blk % 2 ? -1 : 1)));
  }
  sum = sum.scaled(GaussRat::I().pow(-n));
  MPoly rhs = scaled_moment_poly(n);
  VerificationReport rep;
  rep.add("staircase", "imaginary-unit moment identity symbolic n=" + std::to_string(n), sum == rhs && sum.is_real());
  return rep;
}

// ---------------------------------------------------------------------------
// alternative tableaux

bool AltTableau::valid() const {
  if (rows < 0 || cols < 0 || static_cast<int>(row_len.size()) != rows) return false;
  for (int i = 0; i < rows; ++i)
    if (row_len[i] < 0 || row_len[i] > cols || (i > 0 && row_len[i] > row_len[i - 1])) return false;
  for (const auto& [rc, ar] : arrows) {
    auto [r, c] = rc;
    if (r < 1 || r > rows || c < 1 || c > row_len[r - 1]) return false;
    for (const auto& [rc2, ar2] : arrows) {
      if (ar == Arrow::Up && rc2.second == c && rc2.first < r) return false;
      if (ar == Arrow::Left && rc2.first == r && rc2.second < c) return false;
    }
  }
  return true;
}

bool is_catalan(const AltTableau& t) {
  if (!t.valid()) return false;
  for (int r = 1; r <= t.rows; ++r)
    for (int c = 1; c <= t.row_len[r - 1]; ++c) {
      if (t.arrows.count({r, c})) continue;
      bool pointed = false;
      for (const auto& [rc, ar] : t.arrows) {
        if (ar == Arrow::Up && rc.second == c && rc.first > r) pointed = true;
        if (ar == Arrow::Left && rc.first == r && rc.second > c) pointed = true;
      }
      if (!pointed) return false;
    }
  return true;
}

AltTableau to_alternative(const StaircaseTableau& t) {
  if (!t.legal()) throw std::invalid_argument("to_alternative: not a staircase tableau");
  for (char c : t.cells)
    if (c == 'a' || c == 'b') throw std::invalid_argument("to_alternative: tableau has alpha or beta");
  int n = t.n;
  std::vector<int> keep_rows, keep_cols;
  for (int i = 1; i <= n; ++i)
    if (t.at(i, n + 1 - i) == 'g') keep_rows.push_back(i);
  for (int j = 1; j <= n; ++j)
    if (t.at(n + 1 - j, j) == 'd') keep_cols.push_back(j);
  AltTableau a;
  a.rows = static_cast<int>(keep_rows.size());
  a.cols = static_cast<int>(keep_cols.size());
  for (int r = 0; r < a.rows; ++r) {
    int i = keep_rows[r], len = 0;
    for (int cc = 0; cc < a.cols; ++cc) {
      int j = keep_cols[cc];
      if (j > n + 1 - i) break;
      len = cc + 1;
      char x = t.at(i, j);
      if (x == 'g') a.arrows[{r + 1, cc + 1}] = Arrow::Up;
      if (x == 'd') a.arrows[{r + 1, cc + 1}] = Arrow::Left;
    }
    a.row_len.push_back(len);
  }
  if (!a.valid()) throw std::logic_error("to_alternative: produced an illegal alternative tableau");
  return a;
}

namespace {

void shapes_in_box(int r, int c, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r) {
    out.push_back(cur);
    return;
  }
  int hi = cur.empty() ? c : cur.back();
  for (int v = 0; v <= hi; ++v) {
    cur.push_back(v);
    shapes_in_box(r, c, cur, out);
    cur.pop_back();
  }
}

void fill_alt(AltTableau& a, std::vector<std::pair<int, int>>& cells, size_t k, std::vector<bool>& col_arrow,
              std::vector<bool>& row_arrow, std::vector<AltTableau>& out) {
  if (k == cells.size()) {
    if (is_catalan(a)) out.push_back(a);
    return;
  }
  auto [r, c] = cells[k];
  fill_alt(a, cells, k + 1, col_arrow, row_arrow, out);
  bool ca = col_arrow[c], ra = row_arrow[r];
  if (!ca) {
    a.arrows[{r, c}] = Arrow::Up;
    col_arrow[c] = row_arrow[r] = true;
    fill_alt(a, cells, k + 1, col_arrow, row_arrow, out);
    col_arrow[c] = ca;
    row_arrow[r] = ra;
    a.arrows.erase({r, c});
  }
  if (!ra) {
    a.arrows[{r, c}] = Arrow::Left;
    col_arrow[c] = row_arrow[r] = true;
    fill_alt(a, cells, k + 1, col_arrow, row_arrow, out);
    col_arrow[c] = ca;
    row_arrow[r] = ra;
    a.arrows.erase({r, c});
  }
}

}  // namespace

std::vector<AltTableau> catalan_tableaux(int size) {
  check_cap(size, kStaircaseCap, "catalan_tableaux");
  std::vector<AltTableau> out;
  for (int r = 0; r <= size; ++r) {
    int c = size - r;
    std::vector<std::vector<int>> shapes;
    std::vector<int> cur;
    shapes_in_box(r, c, cur, shapes);
    for (const auto& sh : shapes) {
      AltTableau a;
      a.rows = r;
      a.cols = c;
      a.row_len = sh;
      std::vector<std::pair<int, int>> cells;
      for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= sh[i - 1]; ++j) cells.push_back({i, j});
      // cells are visited row by row, left to right: an up arrow needs no
      // arrow above it, a left arrow none to its left
      std::vector<bool> col_arrow(c + 1, false), row_arrow(r + 1, false);
      fill_alt(a, cells, 0, col_arrow, row_arrow, out);
    }
  }
  return out;
}

long catalan_rows_count(int n, int k) {
  long cnt = 0;
  for (const auto& a : catalan_tableaux(n)) cnt += a.rows == k;
  return cnt;
}

namespace {

// noncrossing set partitions of {1..n} by number of blocks
std::vector<long> noncrossing_by_blocks(int n) {
  std::vector<long> out(n + 1, 0);
  std::vector<int> rg(n, 0);
  std::function<void(int, int)> go = [&](int i, int maxb) {
    if (i == n) {
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = b + 1; c < n; ++c)
            for (int d = c + 1; d < n; ++d)
              if (rg[a] == rg[c] && rg[b] == rg[d] && rg[a] != rg[b]) return;
      ++out[n == 0 ? 0 : maxb];
      return;
    }
    for (int v = 0; v <= maxb; ++v) {
      rg[i] = v;
      go(i + 1, std::max(maxb, v + 1));
    }
  };
  go(0, 0);
  return out;
}

}  // namespace

VerificationReport narayana_consistency(int n) {
  VerificationReport rep;
  const std::string S = "staircase", tag = " n=" + std::to_string(n);
  auto cat = catalan_tableaux(n);
  std::vector<long> by_rows(n + 1, 0);
  for (const auto& a : cat) ++by_rows[a.rows];
  auto nc = noncrossing_by_blocks(n + 1);
  bool rows_ok = true, nc_ok = true;
  for (int k = 0; k <= n; ++k) {
    rows_ok = rows_ok && mpz_class(by_rows[k]) == narayana(n + 1, k + 1);
    nc_ok = nc_ok && by_rows[k] == nc[k + 1];
  }
  rep.add(S, "Catalan tableaux with k rows = N(n+1,k+1)" + tag, rows_ok);
  rep.add(S, "Catalan tableaux with k rows = noncrossing partitions with k+1 blocks" + tag, nc_ok);
  rep.add(S, "Catalan tableaux of size n = Cat(n+1)" + tag,
          mpz_class(static_cast<long>(cat.size())) == catalan_half(mpq_class(n + 1, 1)));

  // tableaux with no alpha, beta and no cell labeled u, by blk
  std::vector<long> ct(n + 1, 0);
  std::set<AltTableau> image;
  bool all_catalan = true;
  if (n <= kStaircaseListCap) {
    for_each_staircase(n, [&](const StaircaseTableau& t, const TableauStats& s) {
      if (s.A || s.B || s.C + s.D + s.E != n * (n + 1) / 2) return;
      ++ct[s.blk];
      AltTableau a = to_alternative(t);
      all_catalan = all_catalan && is_catalan(a);
      image.insert(a);
    });
    bool ct_ok = true;
    for (int k = 0; k <= n; ++k) ct_ok = ct_ok && ct[k] == by_rows[n - k];
    rep.add(S, "CT(n) with blk=k matches Catalan tableaux with n-k rows" + tag, ct_ok);
    std::set<AltTableau> all(cat.begin(), cat.end());
    rep.add(S, "CT(n) maps bijectively onto Catalan tableaux" + tag, all_catalan && image == all);
  }

  mpz_class alt(0);
  for (int k = 0; k <= n; ++k) alt += (k % 2 ? -1 : 1) * narayana(n + 1, n + 1 - k);
  int N = n + 1;
  mpz_class direct(0);
  for (int k = 1; k <= N; ++k) direct += (k % 2 ? -1 : 1) * narayana(N, k);
  mpz_class closed(0);
  if (N % 2) closed = ((N + 1) / 2 % 2 ? -1 : 1) * cat_half(N - 1);
  rep.add(S, "alternating Narayana sum closed form N=" + std::to_string(N), direct == closed);
  // i^n times the alternating sum is Cat(n/2)
  mpz_class top(0);
  if (n % 2 == 0) top = (n / 2) % 2 ? mpz_class(-alt) : alt;
  rep.add(S, "i^n alternating sum = Cat(n/2)" + tag, top == cat_half(n) && (n % 2 == 0 || alt == 0));
  return rep;
}

// ---------------------------------------------------------------------------
// extreme coefficients

namespace {

Mono abcdq(int ea, int eb, int ec, int ed, int eq) {
  Mono m;
  m.e[VA] = ea;
  m.e[VB] = eb;
  m.e[VC] = ec;
  m.e[VD] = ed;
  m.e[VQ] = eq;
  return m;
}

}  // namespace

VerificationReport highest_coeff_check(int n) {
  check_cap(n, kStaircaseListCap, "highest_coeff_check");
  VerificationReport rep;
  MPoly p = scaled_moment_poly(n);
  int e = n * (n - 1) / 2;
  GaussRat got = p.coefficient(abcdq(n, n, n, n, e));
  GaussRat want(cat_half(n));
  rep.add("staircase", "top coefficient = Cat(n/2) n=" + std::to_string(n), got == want,
          got == want ? "" : "got " + got.str() + " want " + want.str());
  // the same coefficient as a signed count of tableaux
  GaussRat tab(0);
  for (const auto& [s, c] : stats_histogram(n))
    if (!s.A && !s.B && s.C + s.D + s.E == n * (n + 1) / 2)
      tab += GaussRat(mpz_class(static_cast<long>(c)) * (s.blk % 2 ? -1 : 1));
  tab *= GaussRat::I().pow(n);
  rep.add("staircase", "top coefficient as a signed tableau count n=" + std::to_string(n), tab == got);
  return rep;
}

VerificationReport next_coeff_check(int n) {
  check_cap(n, kStaircaseListCap, "next_coeff_check");
  VerificationReport rep;
  MPoly p = scaled_moment_poly(n);
  int e = n * (n - 1) / 2;
  GaussRat g1 = p.coefficient(abcdq(n - 1, n, n, n, e));
  GaussRat w1(-cat_half(n + 1));
  GaussRat g2 = p.coefficient(abcdq(n - 1, n - 1, n, n, e));
  GaussRat w2(cat_half(n + 2) - cat_half(n));
  rep.add("staircase", "coefficient of a^{n-1}b^n c^n d^n = -Cat((n+1)/2) n=" + std::to_string(n), g1 == w1,
          g1 == w1 ? "" : "got " + g1.str() + " want " + w1.str());
  rep.add("staircase", "coefficient of a^{n-1}b^{n-1}c^n d^n = Cat((n+2)/2)-Cat(n/2) n=" + std::to_string(n),
          g2 == w2, g2 == w2 ? "" : "got " + g2.str() + " want " + w2.str());
  return rep;
}

nlohmann::json to_json(const StaircaseTableau& t) {
  nlohmann::json j = {{"n", t.n}, {"rows", t.rows()}};
  if (t.legal()) {
    j["labels"] = label_cells(t);
    TableauStats s = stats(t);
    j["stats"] = {{"blk", s.blk}, {"A", s.A}, {"B", s.B}, {"C", s.C}, {"D", s.D}, {"E", s.E}};
  }
  return j;
}

nlohmann::json to_json(const AltTableau& a) {
  std::vector<std::string> grid;
  for (int r = 1; r <= a.rows; ++r) {
    std::string row;
    for (int c = 1; c <= a.row_len[r - 1]; ++c) {
      auto it = a.arrows.find({r, c});
      row.push_back(it == a.arrows.end() ? '.' : it->second == Arrow::Up ? '^' : '<');
    }
    grid.push_back(row);
  }
  return {{"rows", a.rows}, {"cols", a.cols}, {"grid", grid}, {"catalan", is_catalan(a)}};
}

// ---------------------------------------------------------------------------

namespace {

StaircaseTableau example_tableau() {
  return StaircaseTableau::from_rows({"..b...g", ".g..aa", "....d", ".d.g", "..b", ".d", "b"});
}

StaircaseTableau alt_example_tableau() {
  return StaircaseTableau::from_rows(
      {"........d", "......dg", "......d", "dg..gg", "....d", ".d.g", ".dg", ".d", "d"});
}

}  // namespace

VerificationReport staircase_checks(int n_enum, int n_points, int points, uint64_t seed) {
  VerificationReport rep;
  const std::string S = "staircase";
  auto num = [](long v) { return std::to_string(v); };

  StaircaseTableau fig = example_tableau();
  TableauStats fs = stats(fig);
  rep.add(S, "example tableau statistics", fs == TableauStats{3, 2, 3, 3, 3, 11});
  std::vector<std::string> want_labels{"uubquug", "qgqqaa", "qqqqd", "qdqg", "uub", "qd", "b"};
  rep.add(S, "example tableau labels", label_cells(fig) == want_labels);

  AltTableau want;
  want.rows = 4;
  want.cols = 5;
  want.row_len = {4, 3, 2, 2};
  want.arrows = {{{1, 4}, Arrow::Left}, {{2, 1}, Arrow::Left}, {{2, 2}, Arrow::Up},
                 {{2, 3}, Arrow::Up},   {{3, 2}, Arrow::Left}, {{4, 2}, Arrow::Left}};
  AltTableau got = to_alternative(alt_example_tableau());
  rep.add(S, "example alternative tableau", got == want && is_catalan(got));

  MPoly y = MPoly::var(VY);
  rep.add(S, "Z_0 = 1", z_partition(0) == MPoly(1));
  rep.add(S, "Z_1", z_partition(1) == y * MPoly::var(VA) + MPoly::var(VB) + MPoly::var(VC) + y * MPoly::var(VD));

  for (int n = 0; n <= n_enum; ++n) {
    int64_t total = 0;
    for (const auto& [s, c] : stats_histogram(n)) total += c;
    int64_t expect = 1;
    for (int k = 1; k <= n; ++k) expect *= 4 * k;
    rep.add(S, "|T(n)| = 4^n n! n=" + num(n), total == expect);
    Point ones;
    for (int v : {VY, VA, VB, VC, VD, VQ}) ones[v] = GaussRat(1);
    rep.add(S, "Z_n at all ones counts tableaux n=" + num(n), z_partition(n).eval(ones) == GaussRat(total));
  }
  for (int n = 0; n <= std::min(n_enum, 5); ++n) {
    bool ok = true;
    for_each_staircase(n, [&](const StaircaseTableau& t, const TableauStats& s) {
      if (ok && (!t.legal() || stats(t) != s)) ok = false;
    });
    rep.add(S, "labeling total and unique, generator statistics agree n=" + num(n), ok);
  }
  for (int n = 0; n <= n_points; ++n) {
    rep.merge(tableau_moment_check(n, points, seed + n));
    rep.merge(imaginary_moment_check(n, points, seed + 100 + n));
    rep.merge(highest_coeff_check(n));
    rep.merge(next_coeff_check(n));
  }
  for (int n = 0; n <= std::min(n_points, 4); ++n) rep.merge(imaginary_moment_symbolic_check(n));
  for (int n = 0; n <= n_enum; ++n) rep.merge(narayana_consistency(n));
  return rep;
}

}  // namespace awm
