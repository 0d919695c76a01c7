#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dlab/equivalence.hpp"
#include "dlab/tree.hpp"

namespace dlab {

enum class EquivalenceMode { l1, c0 };

std::string to_string(EquivalenceMode m);
EquivalenceMode parse_equivalence_mode(std::string_view s);

// Tree labels are indices into the vector table.
struct BlockTree {
  std::vector<FsVector> vectors;
  FiniteTree tree;
  EquivalenceMode mode = EquivalenceMode::l1;
  Rational K{1};

  std::vector<FsVector> blocks(const Sequence& node) const;
  nlohmann::json to_json() const;
  static BlockTree from_json(const nlohmann::json& j);
};

enum class CertStatus { certified, violated, inconclusive, precondition_failed };
std::string to_string(CertStatus s);

struct BranchValue {
  Sequence branch;
  // l1: bounds on min ||sum a_i x_i|| over sum |a_i| = 1. c0: the exact max over max |a_i| = 1.
  Scalar lower;
  Scalar upper;
  std::vector<Rational> witness;
};

struct TreeCertificate {
  CertStatus status = CertStatus::certified;
  EquivalenceMode mode = EquivalenceMode::l1;
  Rational K{1};
  std::vector<BranchValue> branches;
  std::optional<BranchValue> witness;
  std::string detail;

  nlohmann::json to_json() const;
};

TreeCertificate certify_block_tree(const BlockTree& t, const NormSpace& space, const EquivalenceOptions& options = {});

// Hereditary family of {m_1 < ... < m_l} with m_i >= max supp x_i along some node, inside {1..universe}.
Family tree_to_family(const BlockTree& t, std::uint32_t universe);

struct SearchOptions {
  std::vector<FsVector> user_blocks;
  // Averages over maximal S_beta sets are tried for these beta.
  std::vector<unsigned> average_schedule{1, 2};
  // Candidate branches with larger total support are skipped.
  std::size_t max_branch_support = 64;
  EquivalenceOptions equivalence{};
};

struct SearchResult {
  std::optional<BlockTree> tree;
  std::size_t maximal_sets = 0;
  std::size_t candidates_tried = 0;
  std::size_t branch_failures = 0;
  std::optional<FinSet> failed_set;
  std::optional<TreeCertificate> certificate;

  nlohmann::json to_json() const;
};

// Tries to build a K-certified block tree with one branch per maximal member of fam inside {1..universe}.
SearchResult index_lower_bound_search(const NormSpace& space, const Family& fam, const Rational& K, std::uint32_t universe,
                                      EquivalenceMode mode = EquivalenceMode::l1, const SearchOptions& options = {});

}  // namespace dlab
