#include "dlab/tree.hpp"

#include <algorithm>

#include "dlab/errors.hpp"

namespace dlab {

FiniteTree FiniteTree::from_nodes(std::vector<Sequence> nodes) {
  FiniteTree t;
  for (auto& s : nodes) {
    if (s.empty()) throw DomainError("the root is implicit; empty sequences are not stored");
    t.nodes_.insert(std::move(s));
  }
  for (const auto& s : t.nodes_) {
    if (s.size() > 1 && !t.contains(Sequence(s.begin(), s.end() - 1))) throw DomainError("node set is not prefix-closed");
  }
  return t;
}

FiniteTree FiniteTree::from_branches(const std::vector<Sequence>& branches) {
  FiniteTree t;
  for (const auto& b : branches)
    for (std::size_t k = 1; k <= b.size(); ++k) t.nodes_.insert(Sequence(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(k)));
  return t;
}

FiniteTree FiniteTree::chain(std::size_t length) {
  Sequence s;
  for (std::size_t i = 0; i < length; ++i) s.push_back(static_cast<Label>(i));
  return from_branches({s});
}

FiniteTree FiniteTree::full(std::size_t arity, std::size_t depth) {
  FiniteTree t;
  std::vector<Sequence> level{{}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Sequence> next;
    for (const auto& s : level)
      for (std::size_t a = 0; a < arity; ++a) {
        auto c = s;
        c.push_back(static_cast<Label>(a));
        t.nodes_.insert(c);
        next.push_back(std::move(c));
      }
    level = std::move(next);
  }
  return t;
}

std::vector<Sequence> FiniteTree::maximal_nodes() const {
  std::vector<Sequence> out;
  for (auto it = nodes_.begin(); it != nodes_.end(); ++it) {
    // In lexicographic order an extension of s, if any, is its immediate successor.
    auto nx = std::next(it);
    bool extended = nx != nodes_.end() && nx->size() > it->size() && std::equal(it->begin(), it->end(), nx->begin());
    if (!extended) out.push_back(*it);
  }
  return out;
}

std::size_t FiniteTree::height() const {
  std::size_t h = 0;
  for (const auto& s : nodes_) h = std::max(h, s.size());
  return h;
}

FiniteTree FiniteTree::closed_under_subsequences() const {
  FiniteTree t;
  for (const auto& s : nodes_) {
    if (s.size() > 20) throw ResourceError("subsequence closure limited to branches of length 20");
    for (std::uint32_t mask = 1; mask < (1u << s.size()); ++mask) {
      Sequence sub;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (mask >> i & 1u) sub.push_back(s[i]);
      t.nodes_.insert(std::move(sub));
    }
  }
  return t;
}

FiniteTree derivative(const FiniteTree& t) {
  auto leaves = t.maximal_nodes();
  std::set<Sequence> drop(leaves.begin(), leaves.end());
  std::vector<Sequence> keep;
  for (const auto& s : t.nodes())
    if (!drop.count(s)) keep.push_back(s);
  return FiniteTree::from_nodes(std::move(keep));
}

std::size_t order(const FiniteTree& t) {
  std::size_t k = 0;
  FiniteTree cur = t;
  while (!cur.empty()) {
    cur = derivative(cur);
    ++k;
  }
  return k;
}

FiniteTree family_as_tree(const Family& fam, std::uint32_t universe, const FamilyLimits& limits) {
  std::vector<Sequence> nodes;
  for (const auto& f : enumerate(fam, universe, limits)) {
    if (f.empty()) continue;
    nodes.emplace_back(f.begin(), f.end());
  }
  return FiniteTree::from_nodes(std::move(nodes));
}

}  // namespace dlab
