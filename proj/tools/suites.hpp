#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace dlab::suites {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  nlohmann::json details = nlohmann::json::object();
  double seconds = 0;        // kept out of the JSON
  double limit_seconds = 0;  // 0: none
};

struct SuiteConfig {
  std::uint64_t seed = 1;
};

struct SuiteResult {
  std::string name;
  SuiteConfig config;
  std::vector<CriterionResult> criteria;
  bool passed() const;
  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();
// Throws ParseError for an unknown suite.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config = {});

}  // namespace dlab::suites
