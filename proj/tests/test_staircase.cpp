#include <gtest/gtest.h>

#include "awm/qcalc.hpp"
#include "awm/staircase.hpp"

using namespace awm;

namespace {

StaircaseTableau example() {
  return StaircaseTableau::from_rows({"..b...g", ".g..aa", "....d", ".d.g", "..b", ".d", "b"});
}

void expect_all_pass(const VerificationReport& rep) {
  for (const auto& c : rep.checks) EXPECT_EQ(c.status, Status::Pass) << c.name << " " << c.detail;
  EXPECT_FALSE(rep.checks.empty());
}

}  // namespace

TEST(Staircase, ExampleStatsAndLabels) {
  StaircaseTableau t = example();
  ASSERT_TRUE(t.legal());
  EXPECT_EQ(stats(t), (TableauStats{3, 2, 3, 3, 3, 11}));
  std::vector<std::string> want{"uubquug", "qgqqaa", "qqqqd", "qdqg", "uub", "qd", "b"};
  EXPECT_EQ(label_cells(t), want);
}

TEST(Staircase, LegalityRules) {
  // empty diagonal cell
  EXPECT_FALSE(StaircaseTableau::from_rows({"a.", "."}).legal());
  // alpha below a filled cell in its column
  EXPECT_FALSE(StaircaseTableau::from_rows({"ab", "a"}).legal());
  // beta with a filled cell to its left
  EXPECT_FALSE(StaircaseTableau::from_rows({"ab", "b"}).legal());
  EXPECT_TRUE(StaircaseTableau::from_rows({".g", "a"}).legal());
  EXPECT_THROW(StaircaseTableau::from_rows({"ab", "bb"}), std::invalid_argument);
  EXPECT_THROW(label_cells(StaircaseTableau::from_rows({"a.", "."})), std::invalid_argument);
}

TEST(Staircase, CountsAndPartitionFunction) {
  EXPECT_EQ(z_partition(0), MPoly(1));
  MPoly y = MPoly::var(VY);
  EXPECT_EQ(z_partition(1), y * MPoly::var(VA) + MPoly::var(VB) + MPoly::var(VC) + y * MPoly::var(VD));
  Point ones;
  for (int v : {VY, VA, VB, VC, VD, VQ}) ones[v] = GaussRat(1);
  EXPECT_EQ(z_partition(2).eval(ones), GaussRat(32));
  long expect = 1;
  for (int n = 0; n <= 5; ++n) {
    if (n) expect *= 4 * n;
    auto all = enumerate_staircase(n);
    EXPECT_EQ(static_cast<long>(all.size()), expect) << n;
    for (const auto& t : all) ASSERT_NO_THROW(label_cells(t));
  }
  EXPECT_THROW(enumerate_staircase(kStaircaseListCap + 1), std::invalid_argument);
  EXPECT_THROW(stats_histogram(kStaircaseCap + 1), std::invalid_argument);
}

TEST(Staircase, MomentIdentitiesAtPoints) {
  for (int n = 0; n <= 6; ++n) {
    expect_all_pass(tableau_moment_check(n, 5, 7 + n));
    expect_all_pass(imaginary_moment_check(n, 5, 11 + n));
  }
  // the fixed point (1/2,1/3,1/5,1/7,1/11) is always the first sample
  auto rep = tableau_moment_check(1, 1, 0);
  ASSERT_EQ(rep.checks.size(), 1u);
  EXPECT_NE(rep.checks[0].name.find("(1/2,1/3,1/5,1/7,1/11)"), std::string::npos) << rep.checks[0].name;
}

TEST(Staircase, MomentIdentitySymbolic) {
  for (int n = 0; n <= 3; ++n) expect_all_pass(imaginary_moment_symbolic_check(n));
}

TEST(Staircase, AlternativeExample) {
  auto t = StaircaseTableau::from_rows(
      {"........d", "......dg", "......d", "dg..gg", "....d", ".d.g", ".dg", ".d", "d"});
  std::string diag;
  for (int i = 1; i <= 9; ++i) diag.push_back(t.at(i, 10 - i));
  EXPECT_EQ(diag, "dgdgdggdd");
  AltTableau a = to_alternative(t);
  EXPECT_EQ(a.rows, 4);
  EXPECT_EQ(a.cols, 5);
  EXPECT_EQ(a.row_len, (std::vector<int>{4, 3, 2, 2}));
  std::map<std::pair<int, int>, Arrow> want{{{1, 4}, Arrow::Left}, {{2, 1}, Arrow::Left}, {{2, 2}, Arrow::Up},
                                            {{2, 3}, Arrow::Up},   {{3, 2}, Arrow::Left}, {{4, 2}, Arrow::Left}};
  EXPECT_EQ(a.arrows, want);
  EXPECT_TRUE(is_catalan(a));
  EXPECT_THROW(to_alternative(StaircaseTableau::from_rows({"a"})), std::invalid_argument);
}

TEST(Staircase, CatalanTableaux) {
  // size counts rows plus columns, so size n gives Cat(n+1)
  EXPECT_EQ(catalan_tableaux(0).size(), 1u);
  EXPECT_EQ(catalan_tableaux(1).size(), 2u);
  EXPECT_EQ(catalan_tableaux(2).size(), 5u);
  EXPECT_EQ(catalan_tableaux(3).size(), 14u);
  long sum = 0;
  for (int k = 0; k <= 4; ++k) sum += catalan_rows_count(4, k);
  EXPECT_EQ(sum, 42);
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(mpz_class(catalan_rows_count(n, k)), narayana(n + 1, k + 1)) << n << k;
  for (int n = 0; n <= 6; ++n) expect_all_pass(narayana_consistency(n));
}

TEST(Staircase, ExtremeCoefficients) {
  for (int n = 0; n <= 6; ++n) {
    expect_all_pass(highest_coeff_check(n));
    expect_all_pass(next_coeff_check(n));
  }
}

TEST(Staircase, AllChecks) {
  auto rep = staircase_checks(5, 4, 5, 1);
  expect_all_pass(rep);
  EXPECT_TRUE(rep.ok());
}
