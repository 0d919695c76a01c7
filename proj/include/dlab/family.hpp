#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dlab/finset.hpp"
#include "dlab/ordinal.hpp"

namespace dlab {

class Family {
 public:
  enum class Kind { schreier, singletons, bracket, power, explicit_sets, nothing, derivative };

  static Family schreier(Ordinal alpha);
  static Family singletons();
  // outer[inner]: unions F_1 < ... < F_k of inner-sets with (min F_i) in outer.
  static Family bracket(Family outer, Family inner);
  // base[base[...]] with n copies; n >= 1.
  static Family power(Family base, unsigned n);
  // Hereditary closure of the sets; must then be spreading within [1..max element].
  static Family explicit_sets(const std::vector<FinSet>& sets);
  // Stores exactly the given sets plus the empty set; no closure, no validation.
  static Family explicit_unchecked(const std::vector<FinSet>& sets);
  // The family with no members at all.
  static Family nothing();
  // Lazy derivative: G with G in base and G u {n} in base for some n in (max G, max G + bound].
  static Family derived(Family base, std::uint32_t bound);

  Kind kind() const;
  bool contains(std::span<const std::uint32_t> f) const;
  bool contains(const FinSet& f) const { return contains(f.elements()); }

  // Built from Schreier, singletons, bracket and power nodes only.
  bool constructor_built() const;
  // Spreading is known structurally, so right-extension membership is monotone in the new element.
  bool spreading_guaranteed() const;

  const Ordinal& alpha() const;
  const Family& outer() const;
  const Family& inner() const;
  const Family& base() const;
  unsigned exponent() const;
  std::uint32_t derivative_bound() const;
  // Stored sets of an explicit family (closure included), shortlex order.
  std::vector<FinSet> explicit_members() const;
  bool explicit_checked() const;

  std::string str() const;

  const void* identity() const { return node_.get(); }

  struct Node;

 private:
  explicit Family(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Descriptor grammar: S(<ordinal>), BR(<fam>,<fam>), POW(<fam>,<n>), EXPL[{1,2},{3}], S0.
Family parse_family(std::string_view text);

bool member(const Family& fam, const FinSet& f);
// Decides f in outer[inner] by searching decompositions into consecutive inner-blocks.
bool bracket_member(const Family& outer, const Family& inner, const FinSet& f);

}  // namespace dlab
