#include "dlab/dual.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <unordered_map>

#include "dlab/errors.hpp"
#include "dlab/tracker.hpp"
#include "chain_graph.hpp"
#include "dyadic.hpp"

namespace dlab {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

using PieceFn = std::function<Scalar(std::size_t, std::size_t)>;

TrackState keyed(std::size_t q, const TrackState& s) {
  TrackState k{static_cast<std::int64_t>(q)};
  k.insert(k.end(), s.begin(), s.end());
  return k;
}

// sup over admissible chains inside [lo, hi] (prefix may be dropped) of the sum of piece values.
Scalar admissible_sup(const Tracker& t, const std::vector<std::uint32_t>& idx, std::size_t lo, std::size_t hi, const PieceFn& piece,
                      Mode mode) {
  std::unordered_map<TrackState, Scalar, TrackStateHash> memo;
  std::function<Scalar(std::size_t, const TrackState&)> A = [&](std::size_t q, const TrackState& s) -> Scalar {
    TrackState key = keyed(q, s);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Scalar best = piece(q, hi);
    for (std::size_t q2 = q + 1; q2 <= hi; ++q2) {
      auto s2 = t.push(s, idx[q2]);
      if (!s2) continue;
      best = max(best, piece(q, q2 - 1) + A(q2, *s2));
    }
    memo.emplace(std::move(key), best);
    return best;
  };
  Scalar best = Scalar::in_mode(0, mode);
  for (std::size_t p = lo; p <= hi; ++p)
    if (auto s1 = t.push(t.initial(), idx[p])) best = max(best, A(p, *s1));
  return best;
}

// sup over at most n successive runs covering [lo, hi] of the sum of piece values.
Scalar runs_sup(unsigned n, std::size_t lo, std::size_t hi, const PieceFn& piece) {
  const std::size_t len = hi - lo + 1;
  const std::size_t rmax = std::min<std::size_t>(n, len);
  std::vector<Scalar> prev(len), cur(len);
  for (std::size_t r = 1; r <= rmax; ++r) {
    for (std::size_t p = hi + 1; p-- > lo;) {
      Scalar best = piece(p, hi);
      if (r > 1)
        for (std::size_t c = p; c < hi; ++c) best = max(best, piece(p, c) + prev[c + 1 - lo]);
      cur[p - lo] = best;
    }
    std::swap(prev, cur);
  }
  return prev[0];
}

struct Cover {
  Scalar value;
  std::vector<std::size_t> starts;
};

// min over admissible covers of [0, m-1] (first piece at 0) of the largest piece value.
Cover admissible_cover_min(const Tracker& t, const std::vector<std::uint32_t>& idx, const PieceFn& piece) {
  const std::size_t hi = idx.size() - 1;
  struct E {
    Scalar value;
    std::size_t next;
    TrackState state;
  };
  std::unordered_map<TrackState, E, TrackStateHash> memo;
  std::function<const E&(std::size_t, const TrackState&)> H = [&](std::size_t q, const TrackState& s) -> const E& {
    TrackState key = keyed(q, s);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    E e{piece(q, hi), npos, {}};
    for (std::size_t q2 = q + 1; q2 <= hi; ++q2) {
      auto s2 = t.push(s, idx[q2]);
      if (!s2) continue;
      Scalar cand = max(piece(q, q2 - 1), H(q2, *s2).value);
      if (cand < e.value) e = {cand, q2, *s2};
    }
    return memo.emplace(std::move(key), std::move(e)).first->second;
  };
  auto s1 = t.push(t.initial(), idx[0]);
  if (!s1) throw DomainError("family rejects a singleton");
  Cover c{H(0, *s1).value, {0}};
  std::size_t q = 0;
  TrackState s = *s1;
  for (;;) {
    const E& e = H(q, s);
    if (e.next == npos) break;
    c.starts.push_back(e.next);
    q = e.next;
    s = e.state;
  }
  return c;
}

// min over covers of [0, m-1] by at most n runs of the largest piece value.
Cover runs_cover_min(unsigned n, std::size_t m, const PieceFn& piece) {
  const std::size_t hi = m - 1;
  const std::size_t rmax = std::min<std::size_t>(n, m);
  std::vector<std::vector<Scalar>> Q(rmax + 1, std::vector<Scalar>(m));
  std::vector<std::vector<std::size_t>> cut(rmax + 1, std::vector<std::size_t>(m, npos));
  for (std::size_t r = 1; r <= rmax; ++r)
    for (std::size_t p = m; p-- > 0;) {
      Scalar best = piece(p, hi);
      if (r > 1)
        for (std::size_t c = p; c < hi; ++c) {
          Scalar cand = max(piece(p, c), Q[r - 1][c + 1]);
          if (cand < best) {
            best = cand;
            cut[r][p] = c;
          }
        }
      Q[r][p] = best;
    }
  Cover cv{Q[rmax][0], {}};
  std::size_t p = 0, r = rmax;
  for (;;) {
    cv.starts.push_back(p);
    std::size_t c = cut[r][p];
    if (c == npos) break;
    p = c + 1;
    --r;
  }
  return cv;
}

}  // namespace

nlohmann::json Bounds::to_json() const {
  nlohmann::json j{{"lower", lower.str()}, {"upper", upper.str()}, {"exact", exact()}};
  if (inconclusive) j["inconclusive"] = true;
  return j;
}

struct DualEvaluator::Impl {
  NormSpace space;
  FsFunctional phi;
  DualOptions opt;
  Mode mode;
  std::vector<std::uint32_t> idx;
  std::vector<Scalar> abs;
  std::vector<int> sign;
  std::size_t m = 0;
  std::vector<Scalar> up;
  std::vector<std::optional<Scalar>> low;
  std::unique_ptr<DualEvaluator> base;

  Impl(const NormSpace& s, const FsFunctional& f, const DualOptions& o)
      : space(s), phi(f), opt(o), mode(s.exact() ? Mode::exact : Mode::floating) {
    for (const auto& e : f.coords().entries()) {
      idx.push_back(e.index);
      abs.push_back(Scalar::in_mode(::abs(e.value), mode));
      sign.push_back(sgn(e.value));
    }
    m = idx.size();
    low.assign(m * m, std::nullopt);
    switch (space.kind()) {
      case NormSpace::Kind::l1:
      case NormSpace::Kind::c0:
        break;
      case NormSpace::Kind::tsirelson:
        build_tsirelson();
        break;
      case NormSpace::Kind::schlumprecht:
        build_schlumprecht();
        break;
      default:
        // Derived norms dominate their base, so base dual bounds are upper bounds.
        base = std::make_unique<DualEvaluator>(space.base(), phi, opt);
        break;
    }
  }

  Scalar& U(std::size_t lo, std::size_t hi) { return up[lo * m + hi]; }

  Scalar l1(std::size_t lo, std::size_t hi) const {
    Scalar s = Scalar::in_mode(0, mode);
    for (std::size_t p = lo; p <= hi; ++p) s += abs[p];
    return s;
  }

  Scalar linf(std::size_t lo, std::size_t hi) const {
    Scalar s = abs[lo];
    for (std::size_t p = lo + 1; p <= hi; ++p) s = max(s, abs[p]);
    return s;
  }

  // U(lo,hi) = min(l1, splits, (1/theta) * min over admissible covers with >= 2 pieces of the largest piece).
  void build_tsirelson() {
    std::vector<detail::ChainGraph> graphs;
    std::vector<Rational> thetas;
    for (const auto& l : space.levels()) {
      graphs.emplace_back(*make_tracker(l.family), idx);
      thetas.push_back(l.theta);
    }
    if (mode == Mode::exact) {
      std::vector<unsigned> shift;
      for (const auto& t : thetas)
        if (auto s = detail::dyadic_shift(t)) shift.push_back(*s);
      std::vector<Rational> a;
      for (const auto& v : abs) a.push_back(v.rational());
      std::optional<detail::DyadicFrame> frame;
      if (shift.size() == thetas.size()) frame = detail::DyadicFrame::make(a, *std::max_element(shift.begin(), shift.end()));
      if (frame) {
        try {
          std::vector<detail::Wide> av, table;
          for (const auto& q : a) av.push_back(frame->from(q));
          gauge(graphs, av, table, [&](std::size_t l, detail::Wide v) { return detail::DyadicFrame::shl(v, shift[l]); },
                [](detail::Wide x, detail::Wide y) { return detail::DyadicFrame::add(x, y); });
          up.clear();
          for (auto v : table) up.emplace_back(frame->to_rational(v));
          return;
        } catch (const detail::Inexact&) {
        }
      }
    }
    std::vector<Scalar> inv;
    for (const auto& t : thetas) inv.push_back(Scalar::in_mode(1 / t, mode));
    gauge(graphs, abs, up, [&](std::size_t l, const Scalar& v) { return inv[l] * v; },
          [](const Scalar& x, const Scalar& y) { return x + y; });
  }

  template <class T, class Scale, class Add>
  void gauge(const std::vector<detail::ChainGraph>& graphs, const std::vector<T>& av, std::vector<T>& table, Scale scale, Add add) {
    const T zero = av[0] - av[0];
    table.assign(m * m, zero);
    auto Ut = [&](std::size_t lo, std::size_t hi) -> T& { return table[lo * m + hi]; };
    std::vector<std::vector<T>> H(graphs.size());
    for (std::size_t l = 0; l < graphs.size(); ++l) H[l].assign(graphs[l].size(), zero);
    for (std::size_t hi = 0; hi < m; ++hi) {
      T run = zero;
      for (std::size_t lo = hi + 1; lo-- > 0;) {
        run = add(run, av[lo]);
        T val = run;
        for (std::size_t c = lo; c < hi; ++c) {
          T cand = add(Ut(lo, c), Ut(c + 1, hi));
          if (cand < val) val = cand;
        }
        for (std::size_t l = 0; l < graphs.size(); ++l) {
          const auto& g = graphs[l];
          if (g.start[lo] < 0) continue;
          bool found = false;
          T best = zero;
          for (const auto& e : g.out[static_cast<std::size_t>(g.start[lo])]) {
            if (e.q > hi) break;
            T cand = std::max(Ut(lo, e.q - 1), H[l][e.to]);
            if (!found || cand < best) {
              best = cand;
              found = true;
            }
          }
          if (found) {
            T cand = scale(l, best);
            if (cand < val) val = cand;
          }
        }
        Ut(lo, hi) = val;
        for (std::size_t l = 0; l < graphs.size(); ++l) {
          const auto& g = graphs[l];
          for (std::uint32_t p : g.at[lo]) {
            T best = val;
            for (const auto& e : g.out[p]) {
              if (e.q > hi) break;
              T cand = std::max(Ut(lo, e.q - 1), H[l][e.to]);
              if (cand < best) best = cand;
            }
            H[l][p] = best;
          }
        }
      }
    }
  }

  void build_schlumprecht() {
    up.assign(m * m, Scalar(0.0));
    std::vector<double> u(m * m, 0.0);
    for (std::size_t hi = 0; hi < m; ++hi) {
      // Q[p][k]: min over covers of [p..hi] by at most k runs of the largest piece.
      std::vector<std::vector<double>> Q(hi + 1);
      for (std::size_t lo = hi + 1; lo-- > 0;) {
        double val = l1(lo, hi).to_double();
        for (std::size_t c = lo; c < hi; ++c) val = std::min(val, u[lo * m + c] + u[(c + 1) * m + hi]);
        const std::size_t len = hi - lo + 1;
        for (std::size_t k = 2; k <= len; ++k) {
          double best = std::numeric_limits<double>::infinity();
          for (std::size_t c = lo; c < hi; ++c) {
            const auto& rest = Q[c + 1];
            best = std::min(best, std::max(u[lo * m + c], rest[std::min(k - 1, hi - c)]));
          }
          val = std::min(val, std::log2(static_cast<double>(k) + 1.0) * best);
        }
        u[lo * m + hi] = val;
        Q[lo].assign(len + 1, val);
        for (std::size_t k = 2; k <= len; ++k)
          for (std::size_t c = lo; c < hi; ++c)
            Q[lo][k] = std::min(Q[lo][k], std::max(u[lo * m + c], Q[c + 1][std::min(k - 1, hi - c)]));
      }
    }
    for (std::size_t i = 0; i < u.size(); ++i) up[i] = Scalar(u[i]);
  }

  Scalar upper(std::size_t lo, std::size_t hi) {
    switch (space.kind()) {
      case NormSpace::Kind::l1:
        return linf(lo, hi);
      case NormSpace::Kind::c0:
        return l1(lo, hi);
      case NormSpace::Kind::tsirelson:
      case NormSpace::Kind::schlumprecht:
        return U(lo, hi);
      default:
        return base->upper(lo, hi);
    }
  }

  Scalar lower(std::size_t lo, std::size_t hi) {
    if (space.kind() == NormSpace::Kind::l1 || space.kind() == NormSpace::Kind::c0) return upper(lo, hi);
    auto& slot = low[lo * m + hi];
    if (slot) return *slot;
    // Unit vectors have norm one in every supported space.
    Scalar best = linf(lo, hi);
    const auto& entries = phi.coords().entries();
    auto consider = [&](std::vector<FsVector::Entry> e) {
      FsVector x = FsVector::from_entries(std::move(e));
      if (x.empty()) return;
      Scalar v = norm(space, x, opt.limits);
      if (v.sign() <= 0) return;
      Scalar cand = Scalar::in_mode(phi(x), mode) / v;
      best = max(best, cand);
    };
    std::vector<FsVector::Entry> signs, self;
    for (std::size_t p = lo; p <= hi; ++p) {
      signs.push_back({idx[p], Rational(sign[p])});
      self.push_back(entries[p]);
    }
    consider(signs);
    consider(self);
    const std::size_t len = hi - lo + 1;
    if (len <= opt.full_candidates_up_to && len > 2) {
      std::vector<std::size_t> order;
      for (std::size_t p = lo; p <= hi; ++p) order.push_back(p);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return abs[a] > abs[b]; });
      for (std::size_t k = 2; k < len; ++k) {
        std::vector<FsVector::Entry> e;
        for (std::size_t i = 0; i < k; ++i) e.push_back({idx[order[i]], Rational(sign[order[i]])});
        consider(e);
      }
    }
    best = min(best, upper(lo, hi));
    slot = best;
    return best;
  }
};

DualEvaluator::DualEvaluator(const NormSpace& space, const FsFunctional& phi, const DualOptions& options)
    : impl_(std::make_unique<Impl>(space, phi, options)) {}
DualEvaluator::~DualEvaluator() = default;
std::size_t DualEvaluator::size() const { return impl_->m; }
const std::vector<std::uint32_t>& DualEvaluator::indices() const { return impl_->idx; }
Scalar DualEvaluator::upper(std::size_t lo, std::size_t hi) { return impl_->upper(lo, hi); }
Scalar DualEvaluator::lower(std::size_t lo, std::size_t hi) { return impl_->lower(lo, hi); }

namespace {

FsFunctional sectioned(const FsFunctional& phi, std::optional<Interval> section) {
  if (!section) return phi;
  if (section->lo > section->hi) throw DomainError("empty section");
  return phi.restricted(section->lo, section->hi);
}

Bounds finish(Scalar lower, Scalar upper, const DualOptions& opt) {
  Bounds b{std::move(lower), std::move(upper)};
  const bool exact = b.lower.exact() && b.upper.exact();
  const double tol = exact ? opt.tolerance : std::max(opt.tolerance, kFloatTolerance);
  b.inconclusive = !(b.lower == b.upper) && (b.upper - b.lower).to_double() > tol;
  return b;
}

Scalar zero_for(const NormSpace& space) { return Scalar::in_mode(0, space.exact() ? Mode::exact : Mode::floating); }

}  // namespace

Scalar dual_upper(const NormSpace& space, const FsFunctional& phi, const DualOptions& options) {
  if (phi.coords().empty()) return zero_for(space);
  DualEvaluator d(space, phi, options);
  return d.upper(0, d.size() - 1);
}

Bounds dual_norm(const NormSpace& space, const FsFunctional& phi, std::optional<Interval> section, const DualOptions& options) {
  FsFunctional f = sectioned(phi, section);
  if (f.coords().empty()) return {zero_for(space), zero_for(space)};
  DualEvaluator d(space, f, options);
  return finish(d.lower(0, d.size() - 1), d.upper(0, d.size() - 1), options);
}

Bounds dual_intervals_norm(const NormSpace& space, const FsFunctional& phi, unsigned n, std::optional<Interval> section,
                           const DualOptions& options) {
  if (n == 0) throw DomainError("interval count must be >= 1");
  FsFunctional f = sectioned(phi, section);
  if (f.coords().empty()) return {zero_for(space), zero_for(space)};
  DualEvaluator d(space, f, options);
  const std::size_t hi = d.size() - 1;
  Scalar lo = runs_sup(n, 0, hi, [&](std::size_t a, std::size_t b) { return d.lower(a, b); });
  Scalar up = runs_sup(n, 0, hi, [&](std::size_t a, std::size_t b) { return d.upper(a, b); });
  return finish(lo, up, options);
}

Bounds dual_assoc_norm(const NormSpace& space, const FsFunctional& phi, const Family& family, std::optional<Interval> section,
                       const DualOptions& options) {
  FsFunctional f = sectioned(phi, section);
  if (f.coords().empty()) return {zero_for(space), zero_for(space)};
  DualEvaluator d(space, f, options);
  auto t = make_tracker(family);
  const Mode mode = space.exact() ? Mode::exact : Mode::floating;
  const std::size_t hi = d.size() - 1;
  Scalar lo = admissible_sup(*t, d.indices(), 0, hi, [&](std::size_t a, std::size_t b) { return d.lower(a, b); }, mode);
  Scalar up = admissible_sup(*t, d.indices(), 0, hi, [&](std::size_t a, std::size_t b) { return d.upper(a, b); }, mode);
  return finish(lo, up, options);
}

namespace {

template <class DualUpperFn>
Bounds primal_from_cover(const NormSpace& space, const FsVector& x, const Cover& cover, NormEvaluator& ev, DualUpperFn dual_up,
                         const DualOptions& options) {
  const Mode mode = space.exact() ? Mode::exact : Mode::floating;
  std::vector<FsFunctional> candidates;
  candidates.push_back(ev.norming_functional());
  std::vector<FsFunctional> pieces;
  for (std::size_t i = 0; i < cover.starts.size(); ++i) {
    std::size_t end = i + 1 < cover.starts.size() ? cover.starts[i + 1] - 1 : ev.size() - 1;
    pieces.push_back(ev.interval_functional(cover.starts[i], end));
  }
  if (pieces.size() > 1) {
    FsFunctional sum;
    for (const auto& p : pieces) sum = sum + p;
    candidates.push_back(sum);
    for (const auto& p : pieces) candidates.push_back(p);
  }
  for (const auto& e : x.entries()) candidates.push_back(FsFunctional(FsVector::from_entries({{e.index, Rational(sgn(e.value))}})));
  Scalar lower = Scalar::in_mode(0, mode);
  for (const auto& psi : candidates) {
    Scalar ub = dual_up(psi);
    if (ub.sign() <= 0) continue;
    lower = max(lower, Scalar::in_mode(psi(x), mode) / ub);
  }
  lower = min(lower, cover.value);
  return finish(lower, cover.value, options);
}

}  // namespace

Bounds primal_from_dual(const NormSpace& space, const FsVector& x, const Family& family, const DualOptions& options) {
  if (x.empty()) return {zero_for(space), zero_for(space)};
  auto ev = make_evaluator(space, x, options.limits);
  auto t = make_tracker(family);
  Cover cover = admissible_cover_min(*t, ev->indices(), [&](std::size_t a, std::size_t b) { return ev->interval(a, b); });
  return primal_from_cover(space, x, cover, *ev,
                           [&](const FsFunctional& psi) { return dual_assoc_norm(space, psi, family, {}, options).upper; }, options);
}

Bounds primal_from_dual_n(const NormSpace& space, const FsVector& x, unsigned n, const DualOptions& options) {
  if (x.empty()) return {zero_for(space), zero_for(space)};
  auto ev = make_evaluator(space, x, options.limits);
  Cover cover = runs_cover_min(n, ev->size(), [&](std::size_t a, std::size_t b) { return ev->interval(a, b); });
  return primal_from_cover(space, x, cover, *ev,
                           [&](const FsFunctional& psi) { return dual_intervals_norm(space, psi, n, {}, options).upper; }, options);
}

}  // namespace dlab
