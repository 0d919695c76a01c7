#include "dlab/ordinal.hpp"

#include <cctype>
#include <limits>

#include "dlab/errors.hpp"

namespace dlab {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw ResourceError("ordinal coefficient overflow");
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) throw ResourceError("ordinal coefficient overflow");
  return a * b;
}

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view s) : s_(s) {}

  Ordinal parse() {
    skip();
    if (pos_ == s_.size()) fail("empty ordinal expression");
    Ordinal total = term();
    skip();
    while (pos_ < s_.size() && s_[pos_] == '+') {
      ++pos_;
      total = total + term();
      skip();
    }
    if (pos_ != s_.size()) fail("unexpected character");
    return total;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("ordinal '" + std::string(s_) + "': " + why + " at offset " + std::to_string(pos_));
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  std::uint64_t natural() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (pos_ < s_.size() && (s_[pos_] == 'w' || s_[pos_] == '(')) throw UnsupportedError("ordinal '" + std::string(s_) + "': only natural exponents and coefficients are supported (below w^w)");
      fail("expected a natural number");
    }
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = checked_add(checked_mul(v, 10), static_cast<std::uint64_t>(s_[pos_] - '0'));
      ++pos_;
    }
    return v;
  }

  Ordinal term() {
    skip();
    if (peek('w')) {
      ++pos_;
      std::uint64_t e = 1;
      if (peek('^')) {
        ++pos_;
        e = natural();
        if (e > std::numeric_limits<std::uint32_t>::max()) throw ResourceError("exponent too large");
      }
      std::uint64_t c = 1;
      if (peek('*')) {
        ++pos_;
        c = natural();
      }
      if (c == 0) return Ordinal();
      return Ordinal::omega_power(static_cast<std::uint32_t>(e), c);
    }
    std::uint64_t k = natural();
    if (peek('*')) throw UnsupportedError("ordinal '" + std::string(s_) + "': products must have the form w^e*k");
    return Ordinal::natural(k);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal Ordinal::natural(std::uint64_t n) {
  Ordinal a;
  if (n > 0) a.terms_.push_back({0, n});
  return a;
}

Ordinal Ordinal::omega_power(std::uint32_t exponent, std::uint64_t coefficient) {
  Ordinal a;
  if (coefficient > 0) a.terms_.push_back({exponent, coefficient});
  return a;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) throw DomainError("ordinal term with zero coefficient");
    if (i > 0 && terms[i].exponent >= terms[i - 1].exponent) throw DomainError("ordinal exponents must strictly decrease");
  }
  Ordinal a;
  a.terms_ = std::move(terms);
  return a;
}

std::uint64_t Ordinal::as_natural() const {
  if (!is_finite()) throw DomainError("ordinal " + str() + " is not finite");
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

std::uint32_t Ordinal::degree() const {
  if (terms_.empty()) throw DomainError("degree of 0");
  return terms_[0].exponent;
}

Ordinal Ordinal::successor() const { return *this + natural(1); }

Ordinal Ordinal::times(std::uint64_t n) const {
  if (n == 0 || is_zero()) return Ordinal();
  Ordinal r = *this;
  r.terms_[0].coefficient = checked_mul(r.terms_[0].coefficient, n);
  return r;
}

std::string Ordinal::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i) out += '+';
    if (t.exponent == 0) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent > 1) out += '^' + std::to_string(t.exponent);
    if (t.coefficient > 1) out += '*' + std::to_string(t.coefficient);
  }
  return out;
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const std::uint32_t lead = b.terms_[0].exponent;
  Ordinal r;
  for (const auto& t : a.terms_) {
    if (t.exponent > lead) {
      r.terms_.push_back(t);
    } else {
      if (t.exponent == lead) {
        r.terms_.push_back({lead, checked_add(t.coefficient, b.terms_[0].coefficient)});
        r.terms_.insert(r.terms_.end(), b.terms_.begin() + 1, b.terms_.end());
        return r;
      }
      break;
    }
  }
  r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
  return r;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (s.exponent != t.exponent) return s.exponent <=> t.exponent;
    if (s.coefficient != t.coefficient) return s.coefficient <=> t.coefficient;
  }
  return a.terms_.size() <=> b.terms_.size();
}

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser(text).parse(); }

Decomposition successor_decompose(const Ordinal& a) {
  if (a.is_zero()) return {OrdinalKind::zero, {}};
  if (!a.is_successor()) return {OrdinalKind::limit, {}};
  auto terms = a.terms();
  if (--terms.back().coefficient == 0) terms.pop_back();
  return {OrdinalKind::successor, Ordinal::from_terms(std::move(terms))};
}

Ordinal fundamental_sequence(const Ordinal& a, std::uint64_t n) {
  if (!a.is_limit()) throw DomainError("fundamental sequence requested for non-limit ordinal " + a.str());
  if (n == 0) throw DomainError("fundamental sequence index must be >= 1");
  auto terms = a.terms();
  Ordinal::Term last = terms.back();
  terms.pop_back();
  if (last.coefficient > 1) terms.push_back({last.exponent, last.coefficient - 1});
  terms.push_back({last.exponent - 1, n});
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace dlab
