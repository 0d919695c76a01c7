#include "dlab/tracker.hpp"

#include <algorithm>
#include <mutex>

#include "dlab/errors.hpp"

namespace dlab {

namespace {

TrackState slice(const TrackState& s, std::size_t from, std::size_t len) {
  return TrackState(s.begin() + static_cast<std::ptrdiff_t>(from), s.begin() + static_cast<std::ptrdiff_t>(from + len));
}

class SingletonTracker final : public Tracker {
 public:
  std::optional<TrackState> push(const TrackState& s, std::uint32_t) const override {
    if (s[0] != 0) return std::nullopt;
    return TrackState{1};
  }
};

// State [0] before the first element, then [1, blocks still allowed, current block state...].
class SuccessorTracker final : public Tracker {
 public:
  explicit SuccessorTracker(std::shared_ptr<const Tracker> inner) : inner_(std::move(inner)) {}

  std::optional<TrackState> push(const TrackState& s, std::uint32_t x) const override {
    if (s[0] == 0) return compose(static_cast<std::int64_t>(x) - 1, fresh(x));
    TrackState cur = slice(s, 2, s.size() - 2);
    if (auto next = inner_->push(cur, x)) return compose(s[1], *next);
    if (s[1] == 0) return std::nullopt;
    return compose(s[1] - 1, fresh(x));
  }

 private:
  TrackState fresh(std::uint32_t x) const {
    auto t = inner_->push(inner_->initial(), x);
    if (!t) throw DomainError("inner family rejects a singleton");
    return *t;
  }
  static TrackState compose(std::int64_t remaining, const TrackState& inner) {
    TrackState r{1, remaining};
    r.insert(r.end(), inner.begin(), inner.end());
    return r;
  }
  std::shared_ptr<const Tracker> inner_;
};

// Tracks every admissible branch n <= min F of a limit family simultaneously.
// State [0], then [1, count, (n, len, state...)*].
class LimitTracker final : public Tracker {
 public:
  explicit LimitTracker(Ordinal alpha) : alpha_(std::move(alpha)), only_top_(alpha_.terms().back().exponent == 1) {}

  std::optional<TrackState> push(const TrackState& s, std::uint32_t x) const override {
    TrackState r{1, 0};
    auto add = [&](std::int64_t n, const TrackState& sub) {
      r.push_back(n);
      r.push_back(static_cast<std::int64_t>(sub.size()));
      r.insert(r.end(), sub.begin(), sub.end());
      ++r[1];
    };
    if (s[0] == 0) {
      const std::uint32_t lo = only_top_ ? x : 1;
      for (std::uint32_t n = lo; n <= x; ++n) {
        const auto& t = child(n);
        if (auto next = t.push(t.initial(), x)) add(n, *next);
      }
    } else {
      std::size_t p = 2;
      for (std::int64_t i = 0; i < s[1]; ++i) {
        std::int64_t n = s[p];
        std::size_t len = static_cast<std::size_t>(s[p + 1]);
        if (auto next = child(static_cast<std::uint32_t>(n)).push(slice(s, p + 2, len), x)) add(n, *next);
        p += 2 + len;
      }
    }
    if (r[1] == 0) return std::nullopt;
    return r;
  }

 private:
  const Tracker& child(std::uint32_t n) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (children_.size() <= n) children_.resize(n + 1);
    if (!children_[n]) children_[n] = make_tracker(Family::schreier(fundamental_sequence(alpha_, n)));
    return *children_[n];
  }

  Ordinal alpha_;
  bool only_top_;
  mutable std::mutex mu_;
  mutable std::vector<std::shared_ptr<const Tracker>> children_;
};

// Nondeterministic decomposition: the set of (outer state on block minima, current inner block state).
// State [0], then [1, count, (lenOuter, outer..., lenInner, inner...)*] with pairs sorted.
class BracketTracker final : public Tracker {
 public:
  BracketTracker(std::shared_ptr<const Tracker> outer, std::shared_ptr<const Tracker> inner)
      : outer_(std::move(outer)), inner_(std::move(inner)) {}

  std::optional<TrackState> push(const TrackState& s, std::uint32_t x) const override {
    std::vector<std::pair<TrackState, TrackState>> pairs;
    auto start_block = [&](const TrackState& os) {
      auto o = outer_->push(os, x);
      if (!o) return;
      auto i = inner_->push(inner_->initial(), x);
      if (!i) throw DomainError("inner family rejects a singleton");
      pairs.emplace_back(std::move(*o), std::move(*i));
    };
    if (s[0] == 0) {
      start_block(outer_->initial());
    } else {
      std::size_t p = 2;
      for (std::int64_t k = 0; k < s[1]; ++k) {
        std::size_t lo = static_cast<std::size_t>(s[p]);
        TrackState os = slice(s, p + 1, lo);
        p += 1 + lo;
        std::size_t li = static_cast<std::size_t>(s[p]);
        TrackState is = slice(s, p + 1, li);
        p += 1 + li;
        if (auto i = inner_->push(is, x)) pairs.emplace_back(os, std::move(*i));
        start_block(os);
      }
    }
    if (pairs.empty()) return std::nullopt;
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    TrackState r{1, static_cast<std::int64_t>(pairs.size())};
    for (const auto& [o, i] : pairs) {
      r.push_back(static_cast<std::int64_t>(o.size()));
      r.insert(r.end(), o.begin(), o.end());
      r.push_back(static_cast<std::int64_t>(i.size()));
      r.insert(r.end(), i.begin(), i.end());
    }
    return r;
  }

 private:
  std::shared_ptr<const Tracker> outer_, inner_;
};

// Walks the trie of a hereditary explicit family; state [node id].
class ExplicitTracker final : public Tracker {
 public:
  explicit ExplicitTracker(Family fam) : fam_(std::move(fam)) {
    ids_.push_back({});
    auto members = fam_.explicit_members();
    std::sort(members.begin(), members.end());
    for (const auto& f : members) {
      std::int64_t id = 0;
      for (auto x : f) {
        auto& nx = ids_[static_cast<std::size_t>(id)];
        auto it = std::lower_bound(nx.begin(), nx.end(), std::make_pair(x, std::int64_t(0)));
        if (it != nx.end() && it->first == x) {
          id = it->second;
        } else {
          ids_.push_back({});
          auto fresh = static_cast<std::int64_t>(ids_.size() - 1);
          auto& nx2 = ids_[static_cast<std::size_t>(id)];
          nx2.insert(std::lower_bound(nx2.begin(), nx2.end(), std::make_pair(x, std::int64_t(0))), {x, fresh});
          id = fresh;
        }
      }
    }
  }

  std::optional<TrackState> push(const TrackState& s, std::uint32_t x) const override {
    const auto& nx = ids_[static_cast<std::size_t>(s[0])];
    auto it = std::lower_bound(nx.begin(), nx.end(), std::make_pair(x, std::int64_t(0)));
    if (it == nx.end() || it->first != x) return std::nullopt;
    return TrackState{it->second};
  }

 private:
  Family fam_;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> ids_;
};

}  // namespace

std::shared_ptr<const Tracker> make_tracker(const Family& fam) {
  switch (fam.kind()) {
    case Family::Kind::singletons:
      return std::make_shared<SingletonTracker>();
    case Family::Kind::schreier: {
      const Ordinal& a = fam.alpha();
      if (a.is_zero()) return std::make_shared<SingletonTracker>();
      auto d = successor_decompose(a);
      if (d.kind == OrdinalKind::successor)
        return std::make_shared<SuccessorTracker>(make_tracker(Family::schreier(d.predecessor)));
      return std::make_shared<LimitTracker>(a);
    }
    case Family::Kind::bracket:
      return std::make_shared<BracketTracker>(make_tracker(fam.outer()), make_tracker(fam.inner()));
    case Family::Kind::power: {
      auto base = make_tracker(fam.base());
      std::shared_ptr<const Tracker> t = base;
      for (unsigned i = 1; i < fam.exponent(); ++i) t = std::make_shared<BracketTracker>(base, t);
      return t;
    }
    case Family::Kind::explicit_sets:
      if (!fam.explicit_checked()) throw UnsupportedError("unchecked explicit family has no hereditary automaton");
      return std::make_shared<ExplicitTracker>(fam);
    default:
      throw UnsupportedError("family " + fam.str() + " has no membership automaton");
  }
}

bool tracker_accepts(const Tracker& t, std::span<const std::uint32_t> f) {
  TrackState s = t.initial();
  for (auto x : f) {
    auto next = t.push(s, x);
    if (!next) return false;
    s = std::move(*next);
  }
  return true;
}

}  // namespace dlab
