#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dlab/dual.hpp"

namespace dlab {

struct EquivalenceOptions {
  // All subset barycenters are tried up to this many blocks, contiguous runs beyond.
  std::size_t full_subsets_up_to = 12;
  DualOptions dual{};
  // Stop probing once the bounds settle whether the minimum reaches this value.
  std::optional<Rational> decide_at;
  // Pairwise disjoint supports suffice when false.
  bool successive = true;
};

// lower <= min{ ||sum a_i x_i|| : sum |a_i| = 1 } <= upper, witness attains upper.
struct EquivalenceBounds {
  Scalar lower;
  Scalar upper;
  std::vector<Rational> witness;

  bool exact() const { return lower == upper; }
};

// Throws DomainError unless xs are nonzero with successive supports.
void require_block_sequence(const std::vector<FsVector>& xs);
void require_disjoint(const std::vector<FsVector>& xs);

EquivalenceBounds l1_lower_value(const NormSpace& space, const std::vector<FsVector>& xs, const EquivalenceOptions& options = {});

// max{ ||sum a_i x_i|| : max |a_i| = 1 }, which is ||sum x_i|| for unconditional norms.
Scalar c0_upper_value(const NormSpace& space, const std::vector<FsVector>& xs, const NormLimits& limits = {});

}  // namespace dlab
