#include "dlab/family.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "dlab/errors.hpp"

namespace dlab {

struct Family::Node {
  Kind kind;
  Ordinal alpha;
  std::vector<Family> children;  // bracket: {outer, inner}; power/derivative: {base, expansion?}
  unsigned n = 0;
  std::uint32_t bound = 0;

  struct TrieNode {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> next;  // (element, node id), sorted
    bool terminal = false;
  };
  std::vector<TrieNode> trie;
  bool checked = false;

  std::optional<std::uint32_t> child(std::uint32_t id, std::uint32_t x) const {
    const auto& nx = trie[id].next;
    auto it = std::lower_bound(nx.begin(), nx.end(), std::make_pair(x, 0u));
    if (it == nx.end() || it->first != x) return std::nullopt;
    return it->second;
  }

  void insert(std::span<const std::uint32_t> f) {
    std::uint32_t id = 0;
    for (auto x : f) {
      auto c = child(id, x);
      if (!c) {
        trie.push_back({});
        auto fresh = static_cast<std::uint32_t>(trie.size() - 1);
        auto& nx = trie[id].next;
        nx.insert(std::lower_bound(nx.begin(), nx.end(), std::make_pair(x, 0u)), {x, fresh});
        c = fresh;
      }
      id = *c;
    }
    trie[id].terminal = true;
  }

  bool lookup(std::span<const std::uint32_t> f) const {
    std::uint32_t id = 0;
    for (auto x : f) {
      auto c = child(id, x);
      if (!c) return false;
      id = *c;
    }
    return trie[id].terminal;
  }
};

namespace {

bool schreier_member(const Ordinal& a, std::span<const std::uint32_t> f) {
  if (f.empty()) return true;
  if (a.is_zero()) return f.size() == 1;
  auto d = successor_decompose(a);
  if (d.kind == OrdinalKind::successor) {
    // Greedy maximal S_beta prefixes use the fewest blocks because S_beta is hereditary.
    std::size_t i = 0;
    std::uint64_t blocks = 0;
    while (i < f.size()) {
      if (++blocks > f[0]) return false;
      std::size_t j = i + 1;
      while (j < f.size() && schreier_member(d.predecessor, f.subspan(i, j + 1 - i))) ++j;
      i = j;
    }
    return true;
  }
  if (a.terms().back().exponent == 1) {
    // (lambda+w)_k = lambda+k and S_(beta) grows with beta along this sequence, so k = min F suffices.
    return schreier_member(fundamental_sequence(a, f[0]), f);
  }
  for (std::uint64_t k = 1; k <= f[0]; ++k)
    if (schreier_member(fundamental_sequence(a, k), f)) return true;
  return false;
}

bool bracket_search(const Family& outer, const Family& inner, std::span<const std::uint32_t> f, std::size_t pos,
                    std::vector<std::uint32_t>& mins) {
  if (pos == f.size()) return true;
  for (std::size_t end = pos + 1; end <= f.size(); ++end) {
    if (!inner.contains(f.subspan(pos, end - pos))) break;
    mins.push_back(f[pos]);
    if (outer.contains(mins) && bracket_search(outer, inner, f, end, mins)) return true;
    mins.pop_back();
  }
  return false;
}

std::shared_ptr<Family::Node> make_node(Family::Kind k) {
  auto n = std::make_shared<Family::Node>();
  n->kind = k;
  return n;
}

}  // namespace

Family Family::schreier(Ordinal alpha) {
  auto n = make_node(Kind::schreier);
  n->alpha = std::move(alpha);
  return Family(n);
}

Family Family::singletons() { return Family(make_node(Kind::singletons)); }

Family Family::bracket(Family outer, Family inner) {
  auto n = make_node(Kind::bracket);
  n->children = {std::move(outer), std::move(inner)};
  return Family(n);
}

Family Family::power(Family base, unsigned k) {
  if (k == 0) throw DomainError("POW exponent must be >= 1");
  auto n = make_node(Kind::power);
  n->n = k;
  Family expansion = base;
  for (unsigned i = 1; i < k; ++i) expansion = bracket(base, expansion);
  n->children = {std::move(base), std::move(expansion)};
  return Family(n);
}

Family Family::explicit_sets(const std::vector<FinSet>& sets) {
  auto n = make_node(Kind::explicit_sets);
  n->checked = true;
  n->trie.push_back({});
  std::set<std::vector<std::uint32_t>> closure;
  closure.insert({});
  std::uint32_t top = 0;
  for (const auto& s : sets) {
    if (s.size() > 24) throw ResourceError("explicit set " + s.str() + " too large for hereditary closure (limit 24)");
    if (!s.empty()) top = std::max(top, s.max());
    const std::size_t k = s.size();
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      std::vector<std::uint32_t> sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1u) sub.push_back(s[i]);
      closure.insert(std::move(sub));
    }
  }
  for (const auto& f : closure) n->insert(f);
  for (const auto& f : closure) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::uint32_t moved = f[i] + 1;
      if (moved > top || (i + 1 < f.size() && moved == f[i + 1])) continue;
      auto g = f;
      g[i] = moved;
      if (!n->lookup(g))
        throw DomainError("explicit family is not spreading within [1.." + std::to_string(top) + "]: " + FinSet(f).str() +
                          " is a member but " + FinSet(g).str() + " is not");
    }
  }
  return Family(n);
}

Family Family::explicit_unchecked(const std::vector<FinSet>& sets) {
  auto n = make_node(Kind::explicit_sets);
  n->trie.push_back({});
  n->trie[0].terminal = true;
  for (const auto& s : sets) n->insert(s.elements());
  return Family(n);
}

Family Family::nothing() { return Family(make_node(Kind::nothing)); }

Family Family::derived(Family base, std::uint32_t bound) {
  if (bound == 0) throw DomainError("derivative extension bound must be >= 1");
  auto n = make_node(Kind::derivative);
  n->bound = bound;
  n->children = {std::move(base)};
  return Family(n);
}

Family::Kind Family::kind() const { return node_->kind; }

bool Family::contains(std::span<const std::uint32_t> f) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::schreier:
      return schreier_member(n.alpha, f);
    case Kind::singletons:
      return f.size() <= 1;
    case Kind::bracket: {
      std::vector<std::uint32_t> mins;
      return bracket_search(n.children[0], n.children[1], f, 0, mins);
    }
    case Kind::power:
      return n.children[1].contains(f);
    case Kind::explicit_sets:
      return n.lookup(f);
    case Kind::nothing:
      return false;
    case Kind::derivative: {
      const Family& base = n.children[0];
      if (!base.contains(f)) return false;
      std::vector<std::uint32_t> g(f.begin(), f.end());
      const std::uint64_t lo = f.empty() ? 1 : std::uint64_t(f.back()) + 1;
      const std::uint64_t hi = lo - 1 + n.bound;
      if (hi > 0xffffffffu) throw ResourceError("derivative extension exceeds element range");
      g.push_back(0);
      if (base.spreading_guaranteed()) {
        g.back() = static_cast<std::uint32_t>(hi);
        return base.contains(g);
      }
      for (std::uint64_t x = lo; x <= hi; ++x) {
        g.back() = static_cast<std::uint32_t>(x);
        if (base.contains(g)) return true;
      }
      return false;
    }
  }
  return false;
}

bool Family::constructor_built() const {
  switch (node_->kind) {
    case Kind::schreier:
    case Kind::singletons:
      return true;
    case Kind::bracket:
      return node_->children[0].constructor_built() && node_->children[1].constructor_built();
    case Kind::power:
      return node_->children[0].constructor_built();
    default:
      return false;
  }
}

bool Family::spreading_guaranteed() const {
  switch (node_->kind) {
    case Kind::nothing:
      return true;
    case Kind::derivative:
      return node_->children[0].spreading_guaranteed();
    case Kind::explicit_sets:
      return false;
    default:
      return constructor_built();
  }
}

const Ordinal& Family::alpha() const {
  if (node_->kind != Kind::schreier) throw DomainError("not a Schreier family");
  return node_->alpha;
}

const Family& Family::outer() const {
  if (node_->kind != Kind::bracket) throw DomainError("not a bracket family");
  return node_->children[0];
}

const Family& Family::inner() const {
  if (node_->kind != Kind::bracket) throw DomainError("not a bracket family");
  return node_->children[1];
}

const Family& Family::base() const {
  if (node_->kind != Kind::power && node_->kind != Kind::derivative) throw DomainError("family has no base");
  return node_->children[0];
}

unsigned Family::exponent() const {
  if (node_->kind != Kind::power) throw DomainError("not a power family");
  return node_->n;
}

std::uint32_t Family::derivative_bound() const {
  if (node_->kind != Kind::derivative) throw DomainError("not a derivative family");
  return node_->bound;
}

std::vector<FinSet> Family::explicit_members() const {
  if (node_->kind != Kind::explicit_sets) throw DomainError("not an explicit family");
  std::vector<FinSet> out;
  std::vector<std::uint32_t> path;
  auto walk = [&](auto&& self, std::uint32_t id) -> void {
    if (node_->trie[id].terminal) out.emplace_back(path);
    for (auto [x, c] : node_->trie[id].next) {
      path.push_back(x);
      self(self, c);
      path.pop_back();
    }
  };
  walk(walk, 0);
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

bool Family::explicit_checked() const { return node_->kind == Kind::explicit_sets && node_->checked; }

std::string Family::str() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::schreier:
      return "S(" + n.alpha.str() + ")";
    case Kind::singletons:
      return "S0";
    case Kind::bracket:
      return "BR(" + n.children[0].str() + "," + n.children[1].str() + ")";
    case Kind::power:
      return "POW(" + n.children[0].str() + "," + std::to_string(n.n) + ")";
    case Kind::nothing:
      return "EMPTY";
    case Kind::derivative:
      return "D(" + n.children[0].str() + ")";
    case Kind::explicit_sets: {
      auto members = explicit_members();
      std::vector<FinSet> shown;
      if (n.checked) {
        // The maximal members generate the family.
        for (const auto& f : members) {
          bool maximal = true;
          for (const auto& g : members)
            if (g.size() > f.size() && f.subset_of(g)) {
              maximal = false;
              break;
            }
          if (maximal && !f.empty()) shown.push_back(f);
        }
      } else {
        for (const auto& f : members)
          if (!f.empty()) shown.push_back(f);
      }
      std::string s = n.checked ? "EXPL[" : "RAW[";
      for (std::size_t i = 0; i < shown.size(); ++i) s += (i ? "," : "") + shown[i].str();
      return s + "]";
    }
  }
  return "?";
}

namespace {

class FamilyParser {
 public:
  explicit FamilyParser(std::string_view s) : s_(s) {}

  Family parse() {
    Family f = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("family descriptor '" + std::string(s_) + "': " + why + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  // Text up to the matching close bracket at depth zero.
  std::string_view until_close(char close) {
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '(' || c == '[' || c == '{') ++depth;
      if (c == ')' || c == ']' || c == '}') {
        if (depth == 0) {
          if (c != close) fail("mismatched bracket");
          return s_.substr(start, pos_ - start);
        }
        --depth;
      }
      ++pos_;
    }
    fail("unterminated bracket");
  }

  Family expr() {
    if (accept("S(")) {
      auto text = until_close(')');
      expect(")");
      return Family::schreier(parse_ordinal(text));
    }
    if (accept("S0")) return Family::singletons();
    if (accept("BR(")) {
      Family outer = expr();
      expect(",");
      Family inner = expr();
      expect(")");
      return Family::bracket(outer, inner);
    }
    if (accept("POW(")) {
      Family base = expr();
      expect(",");
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned n = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      expect(")");
      return Family::power(base, n);
    }
    if (accept("EXPL[")) {
      std::vector<FinSet> sets;
      skip();
      if (!accept("]")) {
        do {
          skip();
          if (pos_ >= s_.size() || s_[pos_] != '{') fail("expected '{'");
          ++pos_;
          auto body = until_close('}');
          expect("}");
          sets.push_back(parse_finset(body));
        } while (accept(","));
        expect("]");
      }
      return Family::explicit_sets(sets);
    }
    if (accept("EMPTY")) return Family::nothing();
    fail("unknown family constructor");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Family parse_family(std::string_view text) {
  try {
    return FamilyParser(text).parse();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

bool member(const Family& fam, const FinSet& f) { return fam.contains(f); }

bool bracket_member(const Family& outer, const Family& inner, const FinSet& f) {
  std::vector<std::uint32_t> mins;
  return bracket_search(outer, inner, f.elements(), 0, mins);
}

}  // namespace dlab
