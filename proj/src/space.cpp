#include "dlab/space.hpp"

#include <cctype>
#include <optional>

#include "dlab/errors.hpp"
#include "dlab/tracker.hpp"

namespace dlab {

struct NormSpace::Impl {
  Kind kind;
  Mode mode = Mode::exact;
  std::vector<TsirelsonLevel> levels;
  bool mixed = false;
  std::optional<NormSpace> base;
  unsigned n = 0;
  std::optional<Family> family;
  AssocVariant variant = AssocVariant::admissible;
};

namespace {

std::shared_ptr<NormSpace::Impl> impl_of(NormSpace::Kind k) {
  auto p = std::make_shared<NormSpace::Impl>();
  p->kind = k;
  return p;
}

void validate_level(const TsirelsonLevel& l) {
  if (!(l.theta > 0 && l.theta < 1)) throw DomainError("Tsirelson weight must lie in (0,1), got " + l.theta.get_str());
  make_tracker(l.family);
}

}  // namespace

NormSpace NormSpace::l1() { return NormSpace(impl_of(Kind::l1)); }
NormSpace NormSpace::c0() { return NormSpace(impl_of(Kind::c0)); }

NormSpace NormSpace::tsirelson(Family family, Rational theta) {
  auto p = impl_of(Kind::tsirelson);
  p->levels.push_back({std::move(family), std::move(theta)});
  validate_level(p->levels[0]);
  return NormSpace(p);
}

NormSpace NormSpace::mixed_tsirelson(std::vector<TsirelsonLevel> levels) {
  if (levels.empty()) throw DomainError("mixed Tsirelson space needs at least one level");
  for (const auto& l : levels) validate_level(l);
  auto p = impl_of(Kind::tsirelson);
  p->levels = std::move(levels);
  p->mixed = true;
  return NormSpace(p);
}

NormSpace NormSpace::schlumprecht() {
  auto p = impl_of(Kind::schlumprecht);
  p->mode = Mode::floating;
  return NormSpace(p);
}

NormSpace NormSpace::intervals_n(NormSpace base, unsigned n) {
  if (n == 0) throw DomainError("interval count must be >= 1");
  auto p = impl_of(Kind::intervals_n);
  p->mode = base.mode();
  p->base = std::move(base);
  p->n = n;
  return NormSpace(p);
}

NormSpace NormSpace::assoc(NormSpace base, Family family, AssocVariant variant) {
  make_tracker(family);
  auto p = impl_of(Kind::assoc);
  p->mode = base.mode();
  p->base = std::move(base);
  p->family = std::move(family);
  p->variant = variant;
  return NormSpace(p);
}

NormSpace::Kind NormSpace::kind() const { return impl_->kind; }
Mode NormSpace::mode() const { return impl_->mode; }

NormSpace NormSpace::with_mode(Mode mode) const {
  auto p = std::make_shared<Impl>(*impl_);
  p->mode = impl_->kind == Kind::schlumprecht ? Mode::floating : mode;
  if (p->base) p->base = p->base->with_mode(mode);
  return NormSpace(p);
}

bool NormSpace::exact() const {
  if (impl_->mode != Mode::exact || impl_->kind == Kind::schlumprecht) return false;
  return !impl_->base || impl_->base->exact();
}

const std::vector<TsirelsonLevel>& NormSpace::levels() const { return impl_->levels; }
bool NormSpace::mixed() const { return impl_->mixed; }

const NormSpace& NormSpace::base() const {
  if (!impl_->base) throw DomainError("space " + str() + " has no base");
  return *impl_->base;
}

unsigned NormSpace::n() const { return impl_->n; }

const Family& NormSpace::family() const {
  if (!impl_->family) throw DomainError("space " + str() + " has no family");
  return *impl_->family;
}

AssocVariant NormSpace::variant() const { return impl_->variant; }

std::string NormSpace::str() const {
  const Impl& s = *impl_;
  switch (s.kind) {
    case Kind::l1:
      return "L1";
    case Kind::c0:
      return "C0";
    case Kind::schlumprecht:
      return "SCHL";
    case Kind::tsirelson: {
      if (!s.mixed) return "T(" + s.levels[0].family.str() + "," + s.levels[0].theta.get_str() + ")";
      std::string out = "MT[";
      for (std::size_t i = 0; i < s.levels.size(); ++i)
        out += (i ? ",(" : "(") + s.levels[i].family.str() + "," + s.levels[i].theta.get_str() + ")";
      return out + "]";
    }
    case Kind::intervals_n:
      return "NN(" + s.base->str() + "," + std::to_string(s.n) + ")";
    case Kind::assoc:
      return "ASSOC(" + s.base->str() + "," + s.family->str() + "," + (s.variant == AssocVariant::admissible ? "adm" : "allow") + ")";
  }
  return "?";
}

namespace {

// Splits "a,b,c" at commas outside brackets.
std::vector<std::string_view> split_top(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (depth < 0) throw ParseError("unbalanced brackets in '" + std::string(s) + "'");
    if (c == ',' && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets in '" + std::string(s) + "'");
  out.push_back(s.substr(start));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool wrapped(std::string_view s, std::string_view head, char close, std::string_view& body) {
  if (s.substr(0, head.size()) != head || s.empty() || s.back() != close) return false;
  body = s.substr(head.size(), s.size() - head.size() - 1);
  return true;
}

TsirelsonLevel parse_level(std::string_view body, std::string_view whole) {
  auto parts = split_top(body);
  if (parts.size() != 2) throw ParseError("Tsirelson level needs (family,theta) in '" + std::string(whole) + "'");
  return {parse_family(trim(parts[0])), parse_rational(trim(parts[1]))};
}

NormSpace parse_space_impl(std::string_view text) {
  std::string_view s = trim(text), body;
  if (s == "L1") return NormSpace::l1();
  if (s == "C0") return NormSpace::c0();
  if (s == "SCHL") return NormSpace::schlumprecht();
  if (wrapped(s, "T(", ')', body)) {
    auto l = parse_level(body, text);
    return NormSpace::tsirelson(l.family, l.theta);
  }
  if (wrapped(s, "MT[", ']', body)) {
    std::vector<TsirelsonLevel> levels;
    for (auto part : split_top(body)) {
      part = trim(part);
      std::string_view inner;
      if (!wrapped(part, "(", ')', inner)) throw ParseError("mixed Tsirelson level must be parenthesised in '" + std::string(text) + "'");
      levels.push_back(parse_level(inner, text));
    }
    return NormSpace::mixed_tsirelson(std::move(levels));
  }
  if (wrapped(s, "NN(", ')', body)) {
    auto parts = split_top(body);
    if (parts.size() != 2) throw ParseError("NN needs (base,n) in '" + std::string(text) + "'");
    auto nt = trim(parts[1]);
    if (nt.empty() || nt.find_first_not_of("0123456789") != std::string_view::npos) throw ParseError("NN count must be a natural");
    return NormSpace::intervals_n(parse_space_impl(parts[0]), static_cast<unsigned>(std::stoul(std::string(nt))));
  }
  if (wrapped(s, "ASSOC(", ')', body)) {
    auto parts = split_top(body);
    if (parts.size() != 3) throw ParseError("ASSOC needs (base,family,adm|allow) in '" + std::string(text) + "'");
    auto v = trim(parts[2]);
    AssocVariant variant;
    if (v == "adm")
      variant = AssocVariant::admissible;
    else if (v == "allow")
      variant = AssocVariant::allowable;
    else
      throw ParseError("ASSOC variant must be adm or allow");
    return NormSpace::assoc(parse_space_impl(parts[0]), parse_family(trim(parts[1])), variant);
  }
  throw ParseError("unknown space descriptor '" + std::string(text) + "'");
}

}  // namespace

NormSpace parse_space(std::string_view text) {
  try {
    return parse_space_impl(text);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  } catch (const UnsupportedError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace dlab
