#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dlab/family.hpp"
#include "dlab/symbolic.hpp"

namespace dlab {

struct FamilyLimits {
  std::uint32_t max_universe = 24;
  unsigned max_derivative_steps = 16;
};

// All members inside {1..universe}, shortlex order.
std::vector<FinSet> enumerate(const Family& fam, std::uint32_t universe, const FamilyLimits& limits = {});

// Extension bound for right-extensions defaults to the universe.
bool is_maximal(const Family& fam, const FinSet& f, std::uint32_t universe, std::optional<std::uint32_t> bound = {});

Family derivative(const Family& fam, std::uint32_t universe, std::optional<std::uint32_t> bound = {},
                  const FamilyLimits& limits = {});
Family iterated_derivative(const Family& fam, unsigned k, std::uint32_t universe, std::optional<std::uint32_t> bound = {},
                           const FamilyLimits& limits = {});

struct IndexResult {
  SymbolicOrdinal value;
  bool product_rule_assumed = false;
};

IndexResult index_symbolic(const Family& fam);

std::optional<std::uint32_t> tail_domination(const Family& a, const Family& b, std::uint32_t universe,
                                             const FamilyLimits& limits = {});

struct RegularityReport {
  bool hereditary = true;
  bool spreading = true;
  std::string compactness = "not evaluated";
  // (member, missing set) pairs, shortlex by the missing set, at most 16 of each.
  std::vector<std::pair<FinSet, FinSet>> hereditary_counterexamples;
  std::vector<std::pair<FinSet, FinSet>> spreading_counterexamples;
  std::size_t members_checked = 0;
};

RegularityReport check_regular(const Family& fam, std::uint32_t universe, const FamilyLimits& limits = {});

}  // namespace dlab
