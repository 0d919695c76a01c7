#include "dlab/finset.hpp"

#include <algorithm>
#include <cctype>

#include "dlab/errors.hpp"

namespace dlab {

FinSet::FinSet(std::vector<std::uint32_t> elements) : e_(std::move(elements)) {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) throw DomainError("finite sets live in {1,2,...}; got 0");
    if (i > 0 && e_[i] <= e_[i - 1]) throw DomainError("finite set elements must be strictly increasing");
  }
}

FinSet FinSet::interval(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> v;
  for (std::uint32_t i = lo; i <= hi; ++i) v.push_back(i);
  return FinSet(std::move(v));
}

FinSet FinSet::from_unsorted(std::vector<std::uint32_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return FinSet(std::move(elements));
}

std::uint32_t FinSet::min() const {
  if (e_.empty()) throw DomainError("min of the empty set is undefined");
  return e_.front();
}

std::uint32_t FinSet::max() const {
  if (e_.empty()) throw DomainError("max of the empty set is undefined");
  return e_.back();
}

bool FinSet::contains(std::uint32_t x) const { return std::binary_search(e_.begin(), e_.end(), x); }

bool FinSet::subset_of(const FinSet& other) const { return std::includes(other.e_.begin(), other.e_.end(), e_.begin(), e_.end()); }

FinSet FinSet::with(std::uint32_t x) const {
  auto v = e_;
  v.insert(std::upper_bound(v.begin(), v.end(), x), x);
  return FinSet(std::move(v));
}

FinSet FinSet::without_position(std::size_t i) const {
  auto v = e_;
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
  FinSet r;
  r.e_ = std::move(v);
  return r;
}

std::string FinSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e_[i]);
  }
  return s + "}";
}

bool shortlex_less(const FinSet& a, const FinSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

FinSet parse_finset(std::string_view text) {
  std::string_view s = text;
  auto trim = [](std::string_view& v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
  };
  trim(s);
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}') throw ParseError("unbalanced braces in set '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
    trim(s);
  }
  std::vector<std::uint32_t> v;
  while (!s.empty()) {
    auto comma = s.find(',');
    auto tok = s.substr(0, comma);
    trim(tok);
    if (tok.empty()) throw ParseError("empty element in set '" + std::string(text) + "'");
    std::uint64_t x = 0;
    for (char c : tok) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("non-numeric element in set '" + std::string(text) + "'");
      x = x * 10 + static_cast<std::uint64_t>(c - '0');
      if (x > 0xffffffffu) throw ParseError("element too large in set '" + std::string(text) + "'");
    }
    v.push_back(static_cast<std::uint32_t>(x));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
    if (s.empty()) throw ParseError("trailing comma in set '" + std::string(text) + "'");
  }
  try {
    return FinSet(std::move(v));
  } catch (const DomainError& e) {
    throw ParseError("set '" + std::string(text) + "': " + e.what());
  }
}

}  // namespace dlab
