#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "dlab/equivalence.hpp"
#include "dlab/family.hpp"

namespace dlab {

enum class CheckOutcome { pass, fail, inconclusive };
std::string to_string(CheckOutcome c);

// Coefficients rescaled so the largest has absolute value 1.
std::vector<Rational> sup_scaled(const std::vector<Rational>& a);

struct SpreadingResult {
  CheckOutcome outcome = CheckOutcome::pass;
  std::size_t sets_checked = 0;
  std::optional<FinSet> witness_set;
  std::vector<Rational> witness_coefficients;
  // Bounds on min ||sum a_i x_i|| / sum |a_i| at the witness set.
  std::optional<Bounds> witness_value;

  nlohmann::json to_json() const;
};

// blocks[i-1] is x_i. Every maximal member F of S_alpha inside {1..universe} is tested for
// C ||sum_{i in F} a_i x_i|| >= sum |a_i|; subsets of F follow. Stops at the first failure in shortlex order.
SpreadingResult check_spreading_model(const NormSpace& space, const std::vector<FsVector>& blocks, const Ordinal& alpha,
                                      const Rational& C, std::uint32_t universe, const EquivalenceOptions& options = {});

struct AsymptoticityResult {
  // lower <= smallest certifying C on the corpus <= upper.
  Scalar lower;
  Scalar upper;
  std::size_t families = 0;
  std::vector<FinSet> witness;  // supports of the blocks of a family forcing `lower`
  std::vector<Rational> witness_coefficients;

  bool exact() const { return lower == upper; }
  nlohmann::json to_json() const;
};

struct AsymptoticityOptions {
  std::uint32_t max_allowable_universe = 8;
  EquivalenceOptions equivalence{};
};

// Corpus: normalized indicators of successive intervals (admissible) or of pairwise disjoint sets (allowable)
// inside {1..universe} whose minima lie in S_alpha.
AsymptoticityResult measure_asymptoticity(const NormSpace& space, const Ordinal& alpha, std::uint32_t universe, AssocVariant variant,
                                          const AsymptoticityOptions& options = {});

// The corpus itself, in enumeration order.
std::vector<std::vector<FinSet>> asymptoticity_corpus(const Ordinal& alpha, std::uint32_t universe, AssocVariant variant);

}  // namespace dlab
