#include "awm/report.hpp"

#include <algorithm>

namespace awm {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::ConjectureViolation: return "CONJECTURE-VIOLATION";
  }
  return "?";
}

void VerificationReport::add(std::string suite, std::string name, bool ok, std::string detail) {
  // a failure always says what failed
  if (!ok && detail.empty()) detail = "identity fails: " + name;
  checks.push_back({std::move(suite), std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail)});
}

void VerificationReport::add_conjecture(std::string suite, std::string name, bool ok,
                                        std::string detail) {
  if (!ok && detail.empty()) detail = "conjecture fails: " + name;
  checks.push_back({std::move(suite), std::move(name),
                    ok ? Status::Pass : Status::ConjectureViolation, std::move(detail)});
}

void VerificationReport::merge(const VerificationReport& o) {
  checks.insert(checks.end(), o.checks.begin(), o.checks.end());
}

bool VerificationReport::ok() const { return failed() == 0; }

size_t VerificationReport::passed() const {
  return std::count_if(checks.begin(), checks.end(), [](auto& c) { return c.status == Status::Pass; });
}

size_t VerificationReport::failed() const {
  return std::count_if(checks.begin(), checks.end(), [](auto& c) { return c.status == Status::Fail; });
}

size_t VerificationReport::violations() const {
  return std::count_if(checks.begin(), checks.end(),
                       [](auto& c) { return c.status == Status::ConjectureViolation; });
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j = {{"suite", c.suite}, {"name", c.name}, {"status", status_name(c.status)}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  return {{"checks", arr},
          {"summary",
           {{"passed", passed()}, {"failed", failed()}, {"conjecture_violations", violations()}}}};
}

static std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) {
    if (c == '"') r += '"';
    r += c;
  }
  return r + "\"";
}

std::string VerificationReport::to_csv() const {
  std::string out = "suite,name,status,detail\n";
  for (const auto& c : checks)
    out += csv_field(c.suite) + "," + csv_field(c.name) + "," + status_name(c.status) + "," +
           csv_field(c.detail) + "\n";
  return out;
}

}  // namespace awm
