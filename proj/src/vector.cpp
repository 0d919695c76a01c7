#include "dlab/vector.hpp"

#include <algorithm>
#include <cctype>

#include "dlab/errors.hpp"

namespace dlab {

FsVector FsVector::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  FsVector v;
  for (auto& e : entries) {
    if (e.index == 0) throw DomainError("vector indices start at 1");
    if (!v.e_.empty() && v.e_.back().index == e.index) throw DomainError("duplicate vector index " + std::to_string(e.index));
    if (e.value != 0) v.e_.push_back(std::move(e));
  }
  return v;
}

FsVector FsVector::basis(std::uint32_t i) { return from_entries({{i, Rational(1)}}); }

FsVector FsVector::indicator(const FinSet& s, const Rational& value) {
  std::vector<Entry> e;
  for (auto i : s) e.push_back({i, value});
  return from_entries(std::move(e));
}

FsVector FsVector::average(const FinSet& s) {
  if (s.empty()) throw DomainError("average over the empty set");
  return indicator(s, Rational(1, static_cast<unsigned long>(s.size())));
}

std::uint32_t FsVector::min_index() const {
  if (e_.empty()) throw DomainError("zero vector has no support");
  return e_.front().index;
}

std::uint32_t FsVector::max_index() const {
  if (e_.empty()) throw DomainError("zero vector has no support");
  return e_.back().index;
}

FinSet FsVector::support() const {
  std::vector<std::uint32_t> s;
  for (const auto& e : e_) s.push_back(e.index);
  return FinSet(std::move(s));
}

Rational FsVector::at(std::uint32_t i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& e, std::uint32_t k) { return e.index < k; });
  if (it == e_.end() || it->index != i) return 0;
  return it->value;
}

FsVector FsVector::restricted(std::uint32_t lo, std::uint32_t hi) const {
  FsVector v;
  for (const auto& e : e_)
    if (e.index >= lo && e.index <= hi) v.e_.push_back(e);
  return v;
}

FsVector FsVector::restricted(const FinSet& s) const {
  FsVector v;
  for (const auto& e : e_)
    if (s.contains(e.index)) v.e_.push_back(e);
  return v;
}

FsVector FsVector::scaled(const Rational& c) const {
  if (c == 0) return {};
  FsVector v = *this;
  for (auto& e : v.e_) e.value *= c;
  return v;
}

FsVector FsVector::abs() const {
  FsVector v = *this;
  for (auto& e : v.e_)
    if (e.value < 0) e.value = -e.value;
  return v;
}

Rational FsVector::dot(const FsVector& other) const {
  Rational s = 0;
  std::size_t i = 0, j = 0;
  while (i < e_.size() && j < other.e_.size()) {
    if (e_[i].index < other.e_[j].index) {
      ++i;
    } else if (e_[i].index > other.e_[j].index) {
      ++j;
    } else {
      s += e_[i].value * other.e_[j].value;
      ++i;
      ++j;
    }
  }
  return s;
}

Rational FsVector::sup_norm() const {
  Rational m = 0;
  for (const auto& e : e_) m = std::max(m, Rational(::abs(e.value)));
  return m;
}

Rational FsVector::l1_norm() const {
  Rational s = 0;
  for (const auto& e : e_) s += ::abs(e.value);
  return s;
}

FsVector operator+(const FsVector& a, const FsVector& b) {
  std::vector<FsVector::Entry> out;
  std::size_t i = 0, j = 0;
  while (i < a.e_.size() || j < b.e_.size()) {
    if (j == b.e_.size() || (i < a.e_.size() && a.e_[i].index < b.e_[j].index)) {
      out.push_back(a.e_[i++]);
    } else if (i == a.e_.size() || b.e_[j].index < a.e_[i].index) {
      out.push_back(b.e_[j++]);
    } else {
      Rational s = a.e_[i].value + b.e_[j].value;
      if (s != 0) out.push_back({a.e_[i].index, s});
      ++i;
      ++j;
    }
  }
  FsVector v;
  v.e_ = std::move(out);
  return v;
}

bool lex_less(const FsVector& a, const FsVector& b) {
  return std::lexicographical_compare(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end(), [](const auto& x, const auto& y) {
    if (x.index != y.index) return x.index < y.index;
    return x.value < y.value;
  });
}

nlohmann::json FsVector::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : e_) entries.push_back({e.index, e.value.get_str()});
  return {{"mode", "exact"}, {"entries", entries}};
}

std::string FsVector::str() const { return to_json()["entries"].dump(); }

FsVector vector_from_json(const nlohmann::json& j) {
  const nlohmann::json* entries = &j;
  if (j.is_object()) {
    if (!j.contains("entries")) throw ParseError("vector JSON lacks 'entries'");
    entries = &j["entries"];
  }
  if (!entries->is_array()) throw ParseError("vector entries must be an array");
  std::vector<FsVector::Entry> out;
  for (const auto& e : *entries) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned()) throw ParseError("vector entry must be [index, value]");
    Rational v;
    if (e[1].is_string())
      v = parse_rational(e[1].get<std::string>());
    else if (e[1].is_number_integer())
      v = Rational(e[1].get<long>());
    else if (e[1].is_number_float())
      v = Rational(e[1].get<double>());
    else
      throw ParseError("vector value must be a string or number");
    out.push_back({e[0].get<std::uint32_t>(), v});
  }
  try {
    return FsVector::from_entries(std::move(out));
  } catch (const DomainError& err) {
    throw ParseError(err.what());
  }
}

FsVector parse_vector(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("vector JSON: ") + e.what());
  }
  return vector_from_json(j);
}

FsVector parse_basis_name(std::string_view text) {
  if (text.size() < 2 || text[0] != 'e') throw ParseError("expected a basis vector name like e4, got '" + std::string(text) + "'");
  std::uint64_t i = 0;
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad basis vector name '" + std::string(text) + "'");
    i = i * 10 + static_cast<std::uint64_t>(c - '0');
    if (i > 0xffffffffu) throw ParseError("basis index too large");
  }
  if (i == 0) throw ParseError("basis indices start at 1");
  return FsVector::basis(static_cast<std::uint32_t>(i));
}

}  // namespace dlab
