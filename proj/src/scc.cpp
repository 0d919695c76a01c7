#include "dlab/scc.hpp"

#include <functional>
#include <unordered_map>

#include "dlab/family_ops.hpp"
#include "dlab/tracker.hpp"

namespace dlab {

Rational Scc::coefficient(std::uint32_t m) const {
  const auto& e = support.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] == m) return coefficients[i];
  return 0;
}

nlohmann::json Scc::to_json() const {
  nlohmann::json c = nlohmann::json::array();
  for (std::size_t i = 0; i < coefficients.size(); ++i) c.push_back({support.elements()[i], to_string(coefficients[i])});
  nlohmann::json j{{"xi", xi.str()},
                   {"eta", eta.str()},
                   {"epsilon", to_string(epsilon)},
                   {"start", start},
                   {"size", support.size()},
                   {"F", support.str()},
                   {"coefficients", c},
                   {"max_mass", to_string(max_mass)},
                   {"verification", verification}};
  if (heaviest) j["heaviest"] = heaviest->str();
  return j;
}

namespace {

void averages(const Ordinal& xi, std::uint32_t start, const Rational& w, std::vector<std::pair<std::uint32_t, Rational>>& out,
              const SccLimits& limits) {
  if (out.size() >= limits.max_size) throw ResourceError("special convex combination exceeds the size cap");
  auto d = successor_decompose(xi);
  switch (d.kind) {
    case OrdinalKind::zero:
      out.emplace_back(start, w);
      return;
    case OrdinalKind::limit:
      averages(fundamental_sequence(xi, start), start, w, out, limits);
      return;
    case OrdinalKind::successor: {
      const Rational part = w / start;
      std::uint32_t next = start;
      for (std::uint32_t j = 0; j < start; ++j) {
        averages(d.predecessor, next, part, out, limits);
        next = out.back().first + 1;
      }
      return;
    }
  }
}

// Sum over all G in fam inside the support, by enumeration of index subsets.
MassResult enumerate_mass(const Family& fam, const std::vector<std::pair<std::uint32_t, Rational>>& w) {
  MassResult best{0, FinSet{}};
  std::vector<std::uint32_t> cur;
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational acc) {
    if (acc > best.mass) best = {acc, FinSet(cur)};
    for (std::size_t j = i; j < w.size(); ++j) {
      cur.push_back(w[j].first);
      if (fam.contains(cur)) rec(j + 1, acc + w[j].second);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace

std::vector<std::pair<std::uint32_t, Rational>> repeated_averages(const Ordinal& xi, std::uint32_t start, const SccLimits& limits) {
  if (start == 0) throw DomainError("start index must be >= 1");
  std::vector<std::pair<std::uint32_t, Rational>> out;
  averages(xi, start, Rational(1), out, limits);
  return out;
}

MassResult max_family_mass(const Family& fam, const std::vector<std::pair<std::uint32_t, Rational>>& w) {
  auto t = make_tracker(fam);
  struct Best {
    Rational mass;
    std::size_t next;  // chosen position, or npos
    TrackState state;
  };
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::unordered_map<TrackState, Best, TrackStateHash> memo;
  // Best mass of elements chosen at positions >= pos, given the state after earlier choices.
  std::function<const Best&(std::size_t, const TrackState&)> B = [&](std::size_t pos, const TrackState& s) -> const Best& {
    TrackState key{static_cast<std::int64_t>(pos)};
    key.insert(key.end(), s.begin(), s.end());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Best b{0, npos, {}};
    for (std::size_t q = pos; q < w.size(); ++q) {
      auto s2 = t->push(s, w[q].first);
      if (!s2) continue;
      Rational v = w[q].second + B(q + 1, *s2).mass;
      if (v > b.mass) b = {v, q, *s2};
    }
    return memo.emplace(std::move(key), std::move(b)).first->second;
  };
  MassResult r{B(0, t->initial()).mass, FinSet{}};
  std::vector<std::uint32_t> g;
  std::size_t pos = 0;
  TrackState s = t->initial();
  for (;;) {
    const Best& b = B(pos, s);
    if (b.next == npos) break;
    g.push_back(w[b.next].first);
    pos = b.next + 1;
    s = b.state;
  }
  r.witness = FinSet(g);
  return r;
}

Scc build_scc(const Ordinal& xi, const Ordinal& eta, const Rational& epsilon, std::optional<std::uint32_t> start,
              const SccLimits& limits) {
  if (!(eta < xi)) throw DomainError("eta must be smaller than xi");
  if (epsilon <= 0 || epsilon > 1) throw DomainError("epsilon must lie in (0,1]");
  const Family s_eta = Family::schreier(eta);
  const std::uint32_t first = start.value_or(1);
  if (first == 0) throw DomainError("start index must be >= 1");
  for (std::uint32_t s = first; s <= std::max(first, limits.max_start); ++s) {
    std::vector<std::pair<std::uint32_t, Rational>> w;
    try {
      w = repeated_averages(xi, s, limits);
    } catch (const ResourceError&) {
      break;
    }
    MassResult m = max_family_mass(s_eta, w);
    std::string how = "tracker dynamic programming";
    if (w.size() <= limits.enumerate_up_to) {
      MassResult e = enumerate_mass(s_eta, w);
      if (e.mass != m.mass) throw std::logic_error("mass enumeration disagrees with dynamic programming");
      how += " + exhaustive enumeration";
    }
    if (!(m.mass < epsilon)) continue;
    if (start && s != *start)
      throw NeedsLargerStart(s, "epsilon infeasible at start " + std::to_string(*start) + "; least feasible start is " +
                                    std::to_string(s));
    Scc r;
    r.xi = xi;
    r.eta = eta;
    r.epsilon = epsilon;
    r.start = s;
    std::vector<std::uint32_t> f;
    for (auto& [i, a] : w) {
      f.push_back(i);
      r.coefficients.push_back(a);
    }
    r.support = FinSet(f);
    r.max_mass = m.mass;
    r.heaviest = m.witness;
    r.verification = how;
    return r;
  }
  throw ResourceError("no feasible start within the configured budget");
}

}  // namespace dlab
