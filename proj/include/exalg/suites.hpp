#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "exalg/chevalley.hpp"

namespace exalg {

enum class Source { Printed, Derived, Trivial };
std::string to_string(Source s);

struct Check {
  std::string id;
  Source source = Source::Derived;
  bool pass = false;  // outcome as required; for expect_fail checks, the identity must fail
  std::string expected;
  std::string computed;
  bool expect_fail = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0;
  bool ok() const;
};

const std::vector<std::string>& suite_names();  // without "all"
// Throws UnknownTarget for an unknown suite.
SuiteReport run_suite(const std::string& name, const E7Group& G);

nlohmann::json to_json(const SuiteReport& r);
std::string to_text(const SuiteReport& r);

const std::vector<std::string>& dump_targets();
// Throws UnknownTarget.
nlohmann::json dump_target(const std::string& target, const E7Group& G);

}  // namespace exalg
