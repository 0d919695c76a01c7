#include "dlab/family_ops.hpp"

#include <algorithm>

#include "dlab/errors.hpp"

namespace dlab {

namespace {

void check_universe(std::uint32_t universe, const FamilyLimits& limits) {
  if (universe > limits.max_universe)
    throw ResourceError("universe " + std::to_string(universe) + " exceeds enumeration bound " + std::to_string(limits.max_universe));
}

}  // namespace

std::vector<FinSet> enumerate(const Family& fam, std::uint32_t universe, const FamilyLimits& limits) {
  check_universe(universe, limits);
  std::vector<FinSet> out;
  if (fam.kind() == Family::Kind::explicit_sets && !fam.explicit_checked()) {
    // Not hereditary in general, so prefix pruning would be unsound.
    for (auto& f : fam.explicit_members())
      if (f.empty() || f.max() <= universe) out.push_back(std::move(f));
    return out;
  }
  if (!fam.contains(FinSet{})) return out;
  std::vector<std::uint32_t> cur;
  auto dfs = [&](auto&& self) -> void {
    out.emplace_back(cur);
    std::uint32_t from = cur.empty() ? 1 : cur.back() + 1;
    for (std::uint32_t x = from; x <= universe; ++x) {
      cur.push_back(x);
      if (fam.contains(cur)) self(self);
      cur.pop_back();
    }
  };
  dfs(dfs);
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

bool is_maximal(const Family& fam, const FinSet& f, std::uint32_t universe, std::optional<std::uint32_t> bound) {
  if (!fam.contains(f)) throw DomainError(f.str() + " is not a member of " + fam.str());
  for (std::uint32_t x = 1; x <= universe; ++x)
    if (!f.contains(x) && fam.contains(f.with(x))) return false;
  const std::uint32_t b = bound.value_or(std::max<std::uint32_t>(universe, 1));
  const std::uint32_t from = std::max(f.empty() ? 0u : f.max(), universe) + 1;
  const std::uint32_t to = from - 1 + b;
  if (fam.spreading_guaranteed()) return !fam.contains(f.with(to));
  for (std::uint32_t x = from; x <= to; ++x)
    if (fam.contains(f.with(x))) return false;
  return true;
}

Family derivative(const Family& fam, std::uint32_t universe, std::optional<std::uint32_t> bound, const FamilyLimits& limits) {
  return iterated_derivative(fam, 1, universe, bound, limits);
}

Family iterated_derivative(const Family& fam, unsigned k, std::uint32_t universe, std::optional<std::uint32_t> bound,
                           const FamilyLimits& limits) {
  check_universe(universe, limits);
  if (k > limits.max_derivative_steps)
    throw ResourceError("derivative steps " + std::to_string(k) + " exceed bound " + std::to_string(limits.max_derivative_steps));
  const std::uint32_t b = bound.value_or(std::max<std::uint32_t>(universe, 1));
  Family lazy = fam;
  for (unsigned i = 0; i < k; ++i) lazy = Family::derived(lazy, b);
  auto members = enumerate(lazy, universe, limits);
  if (members.empty()) return Family::nothing();
  if (k == 0 && fam.kind() == Family::Kind::explicit_sets && !fam.explicit_checked()) return Family::explicit_unchecked(members);
  return Family::explicit_sets(members);
}

IndexResult index_symbolic(const Family& fam) {
  switch (fam.kind()) {
    case Family::Kind::singletons:
      return {SymbolicOrdinal::from(Ordinal::natural(1)), false};
    case Family::Kind::schreier:
      return {symbolic_omega_pow(fam.alpha()), false};
    case Family::Kind::power: {
      const Family& base = fam.base();
      if (base.kind() == Family::Kind::schreier) return {symbolic_omega_pow(base.alpha().times(fam.exponent())), false};
      if (base.kind() == Family::Kind::singletons) return {SymbolicOrdinal::from(Ordinal::natural(1)), false};
      auto b = index_symbolic(base);
      SymbolicOrdinal v = b.value;
      for (unsigned i = 1; i < fam.exponent(); ++i) v = v * b.value;
      return {v, true};
    }
    case Family::Kind::bracket: {
      if (!fam.outer().constructor_built() || !fam.inner().constructor_built())
        throw UnsupportedError("bracket index requires constructor-built arguments");
      auto m = index_symbolic(fam.outer());
      auto n = index_symbolic(fam.inner());
      return {n.value * m.value, true};
    }
    default:
      throw UnsupportedError("symbolic index unavailable for " + fam.str() + "; use brute force");
  }
}

std::optional<std::uint32_t> tail_domination(const Family& a, const Family& b, std::uint32_t universe, const FamilyLimits& limits) {
  std::uint32_t need = 1;
  for (const auto& f : enumerate(b, universe, limits)) {
    if (f.empty() || a.contains(f)) continue;
    need = std::max(need, f.min() + 1);
  }
  if (need > universe) return std::nullopt;
  return need;
}

RegularityReport check_regular(const Family& fam, std::uint32_t universe, const FamilyLimits& limits) {
  RegularityReport r;
  auto members = enumerate(fam, universe, limits);
  r.members_checked = members.size();
  auto by_missing = [](const auto& x, const auto& y) { return shortlex_less(x.second, y.second) || (x.second == y.second && shortlex_less(x.first, y.first)); };
  std::vector<std::pair<FinSet, FinSet>> her, spr;
  if (!fam.contains(FinSet{})) {
    r.hereditary = false;
    her.emplace_back(FinSet{}, FinSet{});
  }
  for (const auto& f : members) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      FinSet g = f.without_position(i);
      if (!fam.contains(g)) {
        r.hereditary = false;
        her.emplace_back(f, g);
      }
      std::uint32_t moved = f[i] + 1;
      if (moved > universe || (i + 1 < f.size() && f[i + 1] == moved)) continue;
      auto v = f.vec();
      v[i] = moved;
      FinSet h(std::move(v));
      if (!fam.contains(h)) {
        r.spreading = false;
        spr.emplace_back(f, h);
      }
    }
  }
  std::sort(her.begin(), her.end(), by_missing);
  std::sort(spr.begin(), spr.end(), by_missing);
  her.erase(std::unique(her.begin(), her.end(), [](const auto& x, const auto& y) { return x.second == y.second; }), her.end());
  spr.erase(std::unique(spr.begin(), spr.end(), [](const auto& x, const auto& y) { return x.second == y.second; }), spr.end());
  if (her.size() > 16) her.resize(16);
  if (spr.size() > 16) spr.resize(16);
  r.hereditary_counterexamples = std::move(her);
  r.spreading_counterexamples = std::move(spr);
  return r;
}

}  // namespace dlab
