// Command-line front end: moments, verify, scan, enumerate, export.
// Exit codes: 0 success, 1 a verification check failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "awm/arith.hpp"
#include "awm/lattice.hpp"
#include "awm/oracle.hpp"
#include "awm/staircase.hpp"
#include "awm/suites.hpp"
#include "json.hpp"

using namespace awm;

namespace {

constexpr long kMomentsCap = 10;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string spec = "askey-wilson";
  std::string suite = "all";
  std::string formula;
  std::string object = "motzkin";
  long n = -1;  // -1: command default
  std::string format = "json";
  uint64_t seed = 1;
  std::string out;
  bool restricted = false;
};

const char* kVarNames[kNumVars] = {"a", "b", "c", "d", "q", "y", "t", "A"};

std::string csv_header() {
  std::string h = "n,part";
  for (const char* v : kVarNames) h += std::string(",") + v;
  return h + ",re,im\n";
}

void csv_rows(std::ostream& os, long n, const std::string& part, const MPoly& p) {
  for (const auto& [m, c] : p.terms()) {
    os << n << ',' << part;
    for (int v = 0; v < kNumVars; ++v) os << ',' << m.e[v];
    os << ',' << c.re().get_str() << ',' << c.im().get_str() << '\n';
  }
}

// numerator and expanded denominator, one row per monomial
std::string ratfuncs_csv(const std::vector<RatFunc>& values) {
  std::ostringstream os;
  os << csv_header();
  for (size_t n = 0; n < values.size(); ++n) {
    RatFunc r = values[n].reduced();
    csv_rows(os, static_cast<long>(n), "num", r.numerator());
    csv_rows(os, static_cast<long>(n), "den", r.denominator());
  }
  return os.str();
}

nlohmann::json ratfuncs_json(const std::string& key, const std::string& name, const std::vector<RatFunc>& values) {
  nlohmann::json recs = nlohmann::json::array();
  for (size_t n = 0; n < values.size(); ++n) recs.push_back({{"n", n}, {"value", to_json(values[n].reduced())}});
  return {{key, name}, {"records", recs}};
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + cfg.out);
  f << text;
}

long pick_n(const RunConfig& cfg, long def, long cap) {
  long n = cfg.n < 0 ? def : cfg.n;
  if (n > cap) throw UsageError("--n must be at most " + std::to_string(cap) + " for this command");
  return n;
}

int cmd_moments(const RunConfig& cfg) {
  RecurrenceSpec spec;
  try {
    spec = named_spec(cfg.spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  long n = pick_n(cfg, 4, kMomentsCap);
  MomentTable mt = moment_table(spec, n);
  if (cfg.format == "csv")
    emit(cfg, ratfuncs_csv(mt.moments));
  else
    emit(cfg, ratfuncs_json("spec", cfg.spec, mt.moments).dump(2) + "\n");
  return 0;
}

int report_out(const RunConfig& cfg, const VerificationReport& rep) {
  emit(cfg, cfg.format == "csv" ? rep.to_csv() : rep.to_json().dump(2) + "\n");
  std::cerr << rep.passed() << " passed, " << rep.failed() << " failed, " << rep.violations()
            << " conjecture violations\n";
  return rep.ok() ? 0 : kExitFail;
}

SuiteOptions suite_options(const RunConfig& cfg) {
  SuiteOptions o;
  if (cfg.n >= 0) o.n = cfg.n;
  o.seed = cfg.seed;
  return o;
}

int cmd_verify(const RunConfig& cfg) {
  VerificationReport rep;
  try {
    rep = run_suite(cfg.suite, suite_options(cfg));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return report_out(cfg, rep);
}

int cmd_scan(const RunConfig& cfg) { return report_out(cfg, scan_conjectures(suite_options(cfg))); }

int cmd_enumerate(const RunConfig& cfg) {
  if (cfg.format != "json") throw UsageError("enumerate writes json only");
  nlohmann::json items = nlohmann::json::array();
  long n = cfg.n < 0 ? 3 : cfg.n;
  try {
    if (cfg.object == "motzkin") {
      for (const auto& p : enumerate_motzkin(static_cast<int>(n), cfg.restricted)) items.push_back(to_json(p));
    } else if (cfg.object == "dss") {
      // every shape with m + n equal to the given size
      for (int m = 0; m <= n; ++m)
        for (const auto& s : enumerate_dss(m, static_cast<int>(n) - m)) items.push_back(to_json(s));
    } else if (cfg.object == "staircase") {
      for (const auto& t : enumerate_staircase(static_cast<int>(n))) items.push_back(to_json(t));
    } else if (cfg.object == "matchings") {
      for (const auto& m : enumerate_matchings(static_cast<int>(n))) items.push_back(to_json(m));
    } else if (cfg.object == "catalan") {
      for (const auto& a : catalan_tableaux(static_cast<int>(n))) items.push_back(to_json(a));
    } else {
      throw UsageError("unknown object '" + cfg.object + "' (motzkin, dss, staircase, matchings, catalan)");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  nlohmann::json j = {{"object", cfg.object}, {"n", n}, {"count", items.size()}, {"items", items}};
  emit(cfg, j.dump(2) + "\n");
  return 0;
}

int cmd_export(const RunConfig& cfg) {
  if (cfg.formula.empty()) throw UsageError("export needs --formula (one of: see --help)");
  long n = cfg.n < 0 ? 3 : cfg.n;
  std::vector<RatFunc> values;
  try {
    for (long k = 0; k <= n; ++k) values.push_back(eval_formula(cfg.formula, k));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (cfg.format == "csv")
    emit(cfg, ratfuncs_csv(values));
  else
    emit(cfg, ratfuncs_json("formula", cfg.formula, values).dump(2) + "\n");
  return 0;
}

std::string joined(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Askey-Wilson moment formulas: compute, verify, enumerate"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--n", cfg.n, "largest index")->check(CLI::NonNegativeNumber);
  };

  auto* moments = app.add_subcommand("moments", "moment table of a named recurrence");
  moments->add_option("--spec", cfg.spec, "one of: " + joined(spec_names()));
  add_common(moments);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", cfg.suite, "one of: " + joined(known_suites()));
  verify->add_option("--seed", cfg.seed, "seed for random sample points");
  add_common(verify);

  auto* scan = app.add_subcommand("scan", "conjecture scans with witnesses");
  scan->add_option("--seed", cfg.seed, "unused by the scans, accepted for uniformity");
  add_common(scan);

  auto* enumerate = app.add_subcommand("enumerate", "dump combinatorial objects as json");
  enumerate->add_option("--object", cfg.object, "motzkin, dss, staircase, matchings or catalan");
  enumerate->add_flag("--restricted", cfg.restricted, "Motzkin paths without the forbidden peak");
  add_common(enumerate);

  auto* exp = app.add_subcommand("export", "values of a closed-form formula");
  exp->add_option("--formula", cfg.formula, "one of: " + joined(formula_names()));
  add_common(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*moments) return cmd_moments(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*scan) return cmd_scan(cfg);
    if (*enumerate) return cmd_enumerate(cfg);
    if (*exp) return cmd_export(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
