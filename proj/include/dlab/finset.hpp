#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dlab {

// Finite subset of {1,2,...}, stored strictly increasing.
class FinSet {
 public:
  FinSet() = default;
  // Throws DomainError unless the elements are positive and strictly increasing.
  explicit FinSet(std::vector<std::uint32_t> elements);
  FinSet(std::initializer_list<std::uint32_t> elements) : FinSet(std::vector<std::uint32_t>(elements)) {}
  static FinSet interval(std::uint32_t lo, std::uint32_t hi);
  // Sorts and deduplicates.
  static FinSet from_unsorted(std::vector<std::uint32_t> elements);

  bool empty() const { return e_.empty(); }
  std::size_t size() const { return e_.size(); }
  std::uint32_t min() const;
  std::uint32_t max() const;
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::span<const std::uint32_t> elements() const { return e_; }
  const std::vector<std::uint32_t>& vec() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  bool contains(std::uint32_t x) const;
  bool subset_of(const FinSet& other) const;
  FinSet with(std::uint32_t x) const;
  FinSet without_position(std::size_t i) const;

  std::string str() const;

  friend bool operator==(const FinSet&, const FinSet&) = default;
  friend auto operator<=>(const FinSet& a, const FinSet& b) { return a.e_ <=> b.e_; }

 private:
  std::vector<std::uint32_t> e_;
};

// Shorter sets first, then lexicographic.
bool shortlex_less(const FinSet& a, const FinSet& b);

// Accepts "2,3,4", "{2,3,4}", "{}" and "".
FinSet parse_finset(std::string_view text);

}  // namespace dlab
