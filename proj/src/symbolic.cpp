#include "dlab/symbolic.hpp"

#include <limits>

#include "dlab/errors.hpp"

namespace dlab {

SymbolicOrdinal SymbolicOrdinal::from(const Ordinal& a) {
  SymbolicOrdinal r;
  for (const auto& t : a.terms()) r.terms_.push_back({Ordinal::natural(t.exponent), t.coefficient});
  return r;
}

SymbolicOrdinal SymbolicOrdinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) throw DomainError("symbolic ordinal term with zero coefficient");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) throw DomainError("symbolic exponents must strictly decrease");
  }
  SymbolicOrdinal r;
  r.terms_ = std::move(terms);
  return r;
}

std::string SymbolicOrdinal::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i) out += '+';
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent != Ordinal::natural(1)) {
      if (t.exponent.is_finite())
        out += '^' + t.exponent.str();
      else
        out += "^(" + t.exponent.str() + ")";
    }
    if (t.coefficient > 1) out += '*' + std::to_string(t.coefficient);
  }
  return out;
}

SymbolicOrdinal operator+(const SymbolicOrdinal& a, const SymbolicOrdinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.terms_[0].exponent;
  SymbolicOrdinal r;
  for (const auto& t : a.terms_) {
    if (t.exponent > lead) {
      r.terms_.push_back(t);
      continue;
    }
    if (t.exponent == lead) {
      auto c = t.coefficient;
      if (c > std::numeric_limits<std::uint64_t>::max() - b.terms_[0].coefficient) throw ResourceError("coefficient overflow");
      r.terms_.push_back({lead, c + b.terms_[0].coefficient});
      r.terms_.insert(r.terms_.end(), b.terms_.begin() + 1, b.terms_.end());
      return r;
    }
    break;
  }
  r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
  return r;
}

// Left distributivity over the terms of b: a*(w^e*d) = w^(lead(a)+e)*d for e > 0,
// and a*d multiplies only the leading coefficient of a.
SymbolicOrdinal operator*(const SymbolicOrdinal& a, const SymbolicOrdinal& b) {
  if (a.is_zero() || b.is_zero()) return {};
  SymbolicOrdinal r;
  for (const auto& t : b.terms_) {
    SymbolicOrdinal part;
    if (t.exponent.is_zero()) {
      part = a;
      auto& c = part.terms_[0].coefficient;
      if (t.coefficient != 0 && c > std::numeric_limits<std::uint64_t>::max() / t.coefficient) throw ResourceError("coefficient overflow");
      c *= t.coefficient;
    } else {
      part.terms_.push_back({a.terms_[0].exponent + t.exponent, t.coefficient});
    }
    r = r + part;
  }
  return r;
}

std::strong_ordering operator<=>(const SymbolicOrdinal& a, const SymbolicOrdinal& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].exponent <=> b.terms_[i].exponent; c != 0) return c;
    if (auto c = a.terms_[i].coefficient <=> b.terms_[i].coefficient; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

SymbolicOrdinal symbolic_omega_pow(const Ordinal& a) { return SymbolicOrdinal::from_terms({{a, 1}}); }

SymbolicOrdinal symbolic_product(const SymbolicOrdinal& a, const SymbolicOrdinal& b) { return a * b; }

}  // namespace dlab
