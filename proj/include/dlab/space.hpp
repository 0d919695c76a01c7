#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dlab/family.hpp"
#include "dlab/rational.hpp"
#include "dlab/scalar.hpp"

namespace dlab {

enum class AssocVariant { admissible, allowable };

struct TsirelsonLevel {
  Family family;
  Rational theta;
};

class NormSpace {
 public:
  enum class Kind { l1, c0, tsirelson, schlumprecht, intervals_n, assoc };

  static NormSpace l1();
  static NormSpace c0();
  // theta in (0,1); the family must have a membership automaton.
  static NormSpace tsirelson(Family family, Rational theta);
  static NormSpace mixed_tsirelson(std::vector<TsirelsonLevel> levels);
  static NormSpace schlumprecht();
  // sup over at most n successive intervals of the sum of base norms.
  static NormSpace intervals_n(NormSpace base, unsigned n);
  static NormSpace assoc(NormSpace base, Family family, AssocVariant variant);

  Kind kind() const;
  Mode mode() const;
  NormSpace with_mode(Mode mode) const;
  // Exact unless float mode was requested or a Schlumprecht norm is involved.
  bool exact() const;

  const std::vector<TsirelsonLevel>& levels() const;
  bool mixed() const;
  const NormSpace& base() const;
  unsigned n() const;
  const Family& family() const;
  AssocVariant variant() const;

  std::string str() const;

  struct Impl;

 private:
  explicit NormSpace(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

NormSpace parse_space(std::string_view text);

}  // namespace dlab
