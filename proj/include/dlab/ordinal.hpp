#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dlab {

// Ordinal below w^w in Cantor normal form: sum of w^e * c, exponents strictly decreasing.
class Ordinal {
 public:
  struct Term {
    std::uint32_t exponent;
    std::uint64_t coefficient;
    bool operator==(const Term&) const = default;
  };

  Ordinal() = default;
  static Ordinal natural(std::uint64_t n);
  static Ordinal omega_power(std::uint32_t exponent, std::uint64_t coefficient = 1);
  // Throws DomainError unless the terms are already canonical.
  static Ordinal from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent == 0); }
  bool is_successor() const { return !terms_.empty() && terms_.back().exponent == 0; }
  bool is_limit() const { return !terms_.empty() && terms_.back().exponent > 0; }
  // Requires is_finite().
  std::uint64_t as_natural() const;
  // Exponent of the leading term; requires a nonzero ordinal.
  std::uint32_t degree() const;

  Ordinal successor() const;
  // Ordinal multiplication by a natural on the right: a * n.
  Ordinal times(std::uint64_t n) const;

  std::string str() const;

  friend Ordinal operator+(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal&, const Ordinal&) = default;
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

Ordinal parse_ordinal(std::string_view text);
inline std::string to_string(const Ordinal& a) { return a.str(); }

enum class OrdinalKind { zero, successor, limit };

struct Decomposition {
  OrdinalKind kind;
  Ordinal predecessor;  // set for successors only
};

Decomposition successor_decompose(const Ordinal& a);

// (lambda + w^(e+1)*c)_n = lambda + w^(e+1)*(c-1) + w^e*n, for n >= 1.
Ordinal fundamental_sequence(const Ordinal& a, std::uint64_t n);

inline constexpr std::string_view kFundamentalSequenceConvention =
    "(lambda + w^(e+1))_n = lambda + w^e*n; in particular w_n = n, (lambda+w)_n = lambda+n";

}  // namespace dlab
