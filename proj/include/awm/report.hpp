#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace awm {

enum class Status { Pass, Fail, ConjectureViolation };

struct Check {
  std::string suite;
  std::string name;
  Status status = Status::Pass;
  std::string detail;  // witness or mismatch description, empty on pass
};

struct VerificationReport {
  std::vector<Check> checks;

  void add(std::string suite, std::string name, bool ok, std::string detail = "");
  // conjecture scans: a failure is recorded but does not fail the report
  void add_conjecture(std::string suite, std::string name, bool ok, std::string detail = "");
  void merge(const VerificationReport& o);

  bool ok() const;
  size_t passed() const;
  size_t failed() const;
  size_t violations() const;
  nlohmann::json to_json() const;
  std::string to_csv() const;
};

const char* status_name(Status s);

}  // namespace awm
