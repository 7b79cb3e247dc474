// One PASS/FAIL line per acceptance criterion.  Exit status is nonzero if
// any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "awm/suites.hpp"

#ifndef AWM_CLI
#error "AWM_CLI must point at the command-line binary"
#endif

using namespace awm;

namespace {

int failures = 0;

void line(int k, const std::string& what, bool ok, const std::string& note) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << k << ": " << what << " (" << note << ")\n";
  if (!ok) ++failures;
}

void suite_criterion(int k, const std::string& what, const std::string& suite, const std::string& extra = "") {
  VerificationReport rep = run_suite(suite);
  bool ok = rep.ok() && !rep.checks.empty();
  std::string note = std::to_string(rep.passed()) + " checks passed, " + std::to_string(rep.failed()) + " failed";
  if (rep.violations()) note += ", " + std::to_string(rep.violations()) + " conjecture violations";
  if (!extra.empty()) note += "; " + extra;
  line(k, what, ok, note);
  for (const auto& c : rep.checks)
    if (c.status != Status::Pass) std::cout << "    " << status_name(c.status) << " " << c.name << ": " << c.detail << "\n";
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

int main() {
  suite_criterion(1, "closed formulas equal the recurrence oracle", "closed-forms");
  suite_criterion(2, "8W7 forms", "8w7");
  suite_criterion(3, "Motzkin, DSS, involution, rotation and word models", "combinatorics");
  suite_criterion(4, "staircase tableaux", "staircase",
                  "Catalan tableaux of size n = rows + columns number Cat(n+1), k rows occur N(n+1,k+1) times");
  suite_criterion(5, "matchings", "matchings");
  suite_criterion(6, "proven positivity", "positivity");
  suite_criterion(7, "conjecture scans, reported with witnesses", "conjectures");
  suite_criterion(8, "connection formulas", "related");
  suite_criterion(9, "q-series identities", "identities");

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("awm_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::string cli = AWM_CLI;
  bool ran = true;
  for (const char* name : {"run1.json", "run2.json"}) {
    std::string cmd = "\"" + cli + "\" verify --suite all --seed 7 --out \"" + (dir / name).string() + "\" 2>/dev/null";
    ran = ran && std::system(cmd.c_str()) == 0;
  }
  std::string a = slurp(dir / "run1.json"), b = slurp(dir / "run2.json");
  line(10, "verify --suite all twice with one seed is byte-identical", ran && !a.empty() && a == b,
       std::to_string(a.size()) + " bytes" + (ran ? "" : ", a run did not exit 0"));
  fs::remove_all(dir);
  return failures ? 1 : 0;
}
