#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "dlab/family.hpp"
#include "dlab/family_ops.hpp"

namespace dlab {

using Label = std::int64_t;
using Sequence = std::vector<Label>;

// Prefix-closed finite set of nonempty sequences; the empty root is implicit and never stored.
class FiniteTree {
 public:
  FiniteTree() = default;
  // Throws DomainError unless the node set is prefix-closed and free of the empty sequence.
  static FiniteTree from_nodes(std::vector<Sequence> nodes);
  // Adds every nonempty prefix of every branch.
  static FiniteTree from_branches(const std::vector<Sequence>& branches);
  static FiniteTree chain(std::size_t length);
  static FiniteTree full(std::size_t arity, std::size_t depth);

  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  bool contains(const Sequence& s) const { return nodes_.count(s) > 0; }
  const std::set<Sequence>& nodes() const { return nodes_; }
  std::vector<Sequence> maximal_nodes() const;
  std::size_t height() const;
  FiniteTree closed_under_subsequences() const;

  friend bool operator==(const FiniteTree&, const FiniteTree&) = default;

 private:
  std::set<Sequence> nodes_;
};

FiniteTree derivative(const FiniteTree& t);
// Number of derivative steps until the tree is empty.
std::size_t order(const FiniteTree& t);

FiniteTree family_as_tree(const Family& fam, std::uint32_t universe, const FamilyLimits& limits = {});

}  // namespace dlab
