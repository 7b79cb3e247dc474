#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "awm/arith.hpp"
#include "awm/report.hpp"
#include "json.hpp"

namespace awm {

constexpr int kMotzkinCap = 14;
constexpr int kDssCap = 9;       // m + n
constexpr int kDssFixedMuCap = 12;
constexpr int kMatchingCap = 12;

// ---- weighted Motzkin paths ----

enum class StepKind { Up, Down, Horizontal };
// Up: abq^{i-1} or -1, Down: q^i or -1, Horizontal: aq^i or bq^i.
// This is the assignment under which the path/shape dictionary preserves
// weights step by step; swapping the up/down monomials inside each matched
// pair gives the other convention with the same total.
enum class WeightTag { ABQPow, QPow, MinusOne, AQPow, BQPow };

struct Step {
  StepKind kind;
  int level;  // up/down between level-1 and level, horizontal on level
  WeightTag tag;
  friend bool operator==(const Step& x, const Step& y) {
    return x.kind == y.kind && x.level == y.level && x.tag == y.tag;
  }
};

struct MotzkinPath {
  std::vector<Step> steps;
  bool valid() const;
  bool restricted() const;  // no Up(-1) immediately followed by Down(-1)
  friend bool operator==(const MotzkinPath& x, const MotzkinPath& y) { return x.steps == y.steps; }
};

MPoly step_weight(const Step& s);
MPoly path_weight(const MotzkinPath& p);

void for_each_motzkin(int n, bool restricted, const std::function<void(const MotzkinPath&)>& f);
std::vector<MotzkinPath> enumerate_motzkin(int n, bool restricted);
// sum of weights over Mot_n (or Mot*_n), accumulated monomial by monomial
MPoly motzkin_sum(int n, bool restricted);
RatFunc motzkin_moment(int n);
VerificationReport penaud_check(int n);

// ---- doubly striped skew shapes ----

struct Cell {
  int r, c;  // 1-based, rows from the top
  friend bool operator==(const Cell& x, const Cell& y) { return x.r == y.r && x.c == y.c; }
  friend bool operator<(const Cell& x, const Cell& y) { return x.r != y.r ? x.r < y.r : x.c < y.c; }
};
using Stripe = std::vector<Cell>;  // top-left cell first, each next cell one down and one right

class DSShape {
 public:
  DSShape() = default;
  // validates; throws std::logic_error on an illegal shape
  DSShape(int m, int n, std::vector<int> lambda, std::vector<int> mu,
          std::vector<Stripe> white, std::vector<Stripe> black);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<int>& lambda() const { return lambda_; }
  const std::vector<int>& mu() const { return mu_; }
  const std::vector<Stripe>& white() const { return white_; }
  const std::vector<Stripe>& black() const { return black_; }

  bool in_skew(int r, int c) const;
  int cells() const;  // |lambda/mu|
  int white_dots() const;
  int black_dots() const;

  friend bool operator==(const DSShape& x, const DSShape& y);
  friend bool operator!=(const DSShape& x, const DSShape& y) { return !(x == y); }
  friend bool operator<(const DSShape& x, const DSShape& y);
  std::string str() const;  // cell matrix: '#' outside, '.' empty, 'o' white, '*' black

 private:
  void validate() const;
  int m_ = 0, n_ = 0;
  std::vector<int> lambda_, mu_;
  std::vector<Stripe> white_, black_;  // sorted
};

// "nullopt" means no restriction on that component
struct DssConstraint {
  std::optional<std::vector<int>> lambda, mu;
  std::optional<std::vector<Stripe>> white, black;
};

std::vector<DSShape> enumerate_dss(int m, int n, const DssConstraint& c = {});
RatFunc dss_weight(const DSShape& s, const RatFunc& a = RatFunc::var(VA),
                   const RatFunc& b = RatFunc::var(VB));

DSShape rho(const MotzkinPath& p);
MotzkinPath rho_inverse(const DSShape& s);

DSShape kim_involution(const DSShape& s);       // requires no white stripes
DSShape extended_involution(const DSShape& s);  // psi
bool is_psi_fixed(const DSShape& s);            // mu and B empty

DSShape dss_rotate(const DSShape& s);
std::string dss_to_word(const DSShape& s);  // letters 0,1,2; requires mu and B empty
long word_inversions(const std::string& w);

// right-hand sides of the two Motzkin* sum identities
MPoly mot_star_rhs(int k);
MPoly mot_star_rhs_bqa(int k);  // at b = q/a, as a Laurent polynomial

// ---- matchings ----

struct Matching {
  int n = 0;
  std::vector<int> partner;  // 1-based; partner[i] == i for a fixed point, index 0 unused
  std::vector<std::vector<int>> blocks() const;
  int fixed_points() const;
};

int crossing(const Matching& pi);
std::vector<Matching> enumerate_matchings(int n, std::optional<int> fixed_points = std::nullopt);
MPoly p_poly(int n, int m);
MPoly cm_genfunc(int n0, int n1, int n2, int n3, int n4);

// 2^n mu_n(a,b,0,0;q) rebuilt from enumerated matchings
MPoly partial_matching_moment(int n);
// 2^n mu_n(a,b,c,d;q) from the four-parameter matching formula with
// enumerated crossing polynomials
RatFunc matching_main_moment(int n);

nlohmann::json to_json(const MotzkinPath& p);
nlohmann::json to_json(const DSShape& s);
nlohmann::json to_json(const Matching& m);

// exhaustive checks of the module's identities, sized by the arguments
VerificationReport motzkin_checks(int n_paths);
VerificationReport dss_checks(int k_shapes);      // Mot* = DSS, rho, both closed forms
VerificationReport involution_checks(int mn);     // psi, Kim, rotation, for m+n <= mn
VerificationReport word_checks(int max_total);    // u+v+t <= max_total
VerificationReport matching_checks(int n_match);
VerificationReport lattice_checks(int n_paths, int k_shapes, int mn_invol, int n_match);

}  // namespace awm
