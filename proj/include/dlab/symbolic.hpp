#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "dlab/ordinal.hpp"

namespace dlab {

// Ordinal below w^(w^w): Cantor normal form whose exponents are themselves Ordinals.
class SymbolicOrdinal {
 public:
  struct Term {
    Ordinal exponent;
    std::uint64_t coefficient;
    bool operator==(const Term&) const = default;
  };

  SymbolicOrdinal() = default;
  static SymbolicOrdinal from(const Ordinal& a);
  static SymbolicOrdinal from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::string str() const;

  friend SymbolicOrdinal operator+(const SymbolicOrdinal& a, const SymbolicOrdinal& b);
  friend SymbolicOrdinal operator*(const SymbolicOrdinal& a, const SymbolicOrdinal& b);
  friend bool operator==(const SymbolicOrdinal&, const SymbolicOrdinal&) = default;
  friend std::strong_ordering operator<=>(const SymbolicOrdinal& a, const SymbolicOrdinal& b);

 private:
  std::vector<Term> terms_;
};

SymbolicOrdinal symbolic_omega_pow(const Ordinal& a);
SymbolicOrdinal symbolic_product(const SymbolicOrdinal& a, const SymbolicOrdinal& b);

}  // namespace dlab
