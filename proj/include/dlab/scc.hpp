#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dlab/errors.hpp"
#include "dlab/family.hpp"
#include "dlab/rational.hpp"

namespace dlab {

struct SccLimits {
  std::size_t max_size = std::size_t{1} << 16;
  std::uint32_t max_start = 64;
  // Literal enumeration of S_eta subsets is added up to this |F|.
  std::size_t enumerate_up_to = 24;
};

struct Scc {
  Ordinal xi;
  Ordinal eta;
  Rational epsilon;
  std::uint32_t start = 1;
  FinSet support;
  std::vector<Rational> coefficients;  // aligned with support
  Rational max_mass;                   // max over G in S_eta, G inside F, of the mass on G
  std::optional<FinSet> heaviest;      // a G attaining max_mass
  std::string verification;

  Rational coefficient(std::uint32_t m) const;
  nlohmann::json to_json() const;
};

class NeedsLargerStart : public PreconditionError {
 public:
  NeedsLargerStart(std::uint32_t minimal, const std::string& what) : PreconditionError(what), minimal_(minimal) {}
  std::uint32_t minimal_start() const { return minimal_; }

 private:
  std::uint32_t minimal_;
};

// Repeated averages on the maximal S_xi set beginning at start: weights sum to 1.
std::vector<std::pair<std::uint32_t, Rational>> repeated_averages(const Ordinal& xi, std::uint32_t start,
                                                                  const SccLimits& limits = {});

struct MassResult {
  Rational mass;
  FinSet witness;
};

// max over G in fam with G inside the support of the sum of weights, by dynamic programming on tracker states.
MassResult max_family_mass(const Family& fam, const std::vector<std::pair<std::uint32_t, Rational>>& weights);

// Without start, the least feasible start is chosen. An infeasible start throws NeedsLargerStart naming the least
// feasible one.
Scc build_scc(const Ordinal& xi, const Ordinal& eta, const Rational& epsilon, std::optional<std::uint32_t> start = {},
              const SccLimits& limits = {});

}  // namespace dlab
