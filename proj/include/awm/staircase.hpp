#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "awm/arith.hpp"
#include "awm/report.hpp"
#include "json.hpp"

namespace awm {

constexpr int kStaircaseCap = 7;      // streamed enumeration
constexpr int kStaircaseListCap = 6;  // materialized list

// Letters: 'a' alpha, 'b' beta, 'g' gamma, 'd' delta, '.' empty.
// Row i (1-based) holds columns 1..n+1-i; (i, n+1-i) is its diagonal cell.
struct StaircaseTableau {
  int n = 0;
  std::string cells;  // row-major

  static StaircaseTableau from_rows(const std::vector<std::string>& rows);
  static int offset(int n, int i) { return (i - 1) * (n + 1) - (i - 1) * i / 2; }
  char at(int i, int j) const { return cells[offset(n, i) + j - 1]; }
  char& at(int i, int j) { return cells[offset(n, i) + j - 1]; }
  bool legal() const;
  std::vector<std::string> rows() const;
};

struct TableauStats {
  int blk = 0, A = 0, B = 0, C = 0, D = 0, E = 0;
  auto operator<=>(const TableauStats&) const = default;
};

// 'u' or 'q' for each empty cell, the letter otherwise.  Throws if a cell
// gets no label or more than one.
std::vector<std::string> label_cells(const StaircaseTableau& t);
TableauStats stats(const StaircaseTableau& t);

void for_each_staircase(int n, const std::function<void(const StaircaseTableau&, const TableauStats&)>& f);
std::vector<StaircaseTableau> enumerate_staircase(int n);
std::map<TableauStats, int64_t> stats_histogram(int n);

// Z_n with alpha, beta, gamma, delta stored in the a, b, c, d slots
MPoly z_partition(int n);

VerificationReport tableau_moment_check(int n, int points = 5, uint64_t seed = 1);
VerificationReport imaginary_moment_check(int n, int points = 5, uint64_t seed = 1);
// the same identity with a, b, c, d, q left symbolic
VerificationReport imaginary_moment_symbolic_check(int n);

enum class Arrow { Up, Left };

struct AltTableau {
  int rows = 0, cols = 0;
  std::vector<int> row_len;  // weakly decreasing, each <= cols
  std::map<std::pair<int, int>, Arrow> arrows;
  bool valid() const;  // inside the diagram, no arrow points at another
  friend bool operator==(const AltTableau&, const AltTableau&) = default;
  friend auto operator<=>(const AltTableau&, const AltTableau&) = default;
};

AltTableau to_alternative(const StaircaseTableau& t);  // needs no alpha and no beta
bool is_catalan(const AltTableau& a);
std::vector<AltTableau> catalan_tableaux(int size);
long catalan_rows_count(int n, int k);
VerificationReport narayana_consistency(int n);

// coefficient of a^n b^n c^n d^n q^{C(n,2)} and the two neighbours
VerificationReport highest_coeff_check(int n);
VerificationReport next_coeff_check(int n);

nlohmann::json to_json(const StaircaseTableau& t);
nlohmann::json to_json(const AltTableau& a);

VerificationReport staircase_checks(int n_enum, int n_points, int points, uint64_t seed);

}  // namespace awm
