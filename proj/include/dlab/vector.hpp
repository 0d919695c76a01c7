#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dlab/finset.hpp"
#include "dlab/rational.hpp"

namespace dlab {

// Finitely supported vector in coordinates of the unit vector basis.
class FsVector {
 public:
  struct Entry {
    std::uint32_t index;
    Rational value;
    bool operator==(const Entry&) const = default;
  };

  FsVector() = default;
  // Sorts by index, rejects duplicate or zero indices and drops zero values.
  static FsVector from_entries(std::vector<Entry> entries);
  static FsVector basis(std::uint32_t i);
  static FsVector indicator(const FinSet& s, const Rational& value = 1);
  // Equal weights on s summing to one.
  static FsVector average(const FinSet& s);

  const std::vector<Entry>& entries() const { return e_; }
  bool empty() const { return e_.empty(); }
  std::size_t size() const { return e_.size(); }
  std::uint32_t min_index() const;
  std::uint32_t max_index() const;
  FinSet support() const;
  Rational at(std::uint32_t i) const;

  FsVector restricted(std::uint32_t lo, std::uint32_t hi) const;
  FsVector restricted(const FinSet& s) const;
  FsVector scaled(const Rational& c) const;
  FsVector abs() const;
  Rational dot(const FsVector& other) const;
  Rational sup_norm() const;
  Rational l1_norm() const;

  friend FsVector operator+(const FsVector& a, const FsVector& b);
  friend bool operator==(const FsVector&, const FsVector&) = default;
  // Lexicographic on (index, value) entry lists.
  friend bool lex_less(const FsVector& a, const FsVector& b);

  nlohmann::json to_json() const;
  std::string str() const;

 private:
  std::vector<Entry> e_;
};

// Functional in biorthogonal coordinates, sum of phi_i e*_i.
class FsFunctional {
 public:
  FsFunctional() = default;
  explicit FsFunctional(FsVector coords) : c_(std::move(coords)) {}
  static FsFunctional coordinate(std::uint32_t i) { return FsFunctional(FsVector::basis(i)); }

  const FsVector& coords() const { return c_; }
  Rational operator()(const FsVector& x) const { return c_.dot(x); }
  FsFunctional restricted(std::uint32_t lo, std::uint32_t hi) const { return FsFunctional(c_.restricted(lo, hi)); }
  FsFunctional restricted(const FinSet& s) const { return FsFunctional(c_.restricted(s)); }
  FsFunctional scaled(const Rational& c) const { return FsFunctional(c_.scaled(c)); }
  friend FsFunctional operator+(const FsFunctional& a, const FsFunctional& b) { return FsFunctional(a.c_ + b.c_); }
  friend bool operator==(const FsFunctional&, const FsFunctional&) = default;

 private:
  FsVector c_;
};

// {"mode":"exact","entries":[[i,"p/q"],...]} or a bare entries array.
FsVector vector_from_json(const nlohmann::json& j);
FsVector parse_vector(std::string_view text);
// "e4" style basis names.
FsVector parse_basis_name(std::string_view text);

}  // namespace dlab
