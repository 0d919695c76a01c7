#include "dlab/norm.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>

#include "dlab/errors.hpp"
#include "dlab/tracker.hpp"
#include "chain_graph.hpp"
#include "dyadic.hpp"

namespace dlab {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

TrackState keyed(std::size_t q, const TrackState& s) {
  TrackState k;
  k.reserve(s.size() + 1);
  k.push_back(static_cast<std::int64_t>(q));
  k.insert(k.end(), s.begin(), s.end());
  return k;
}

FsFunctional sum_of(const std::vector<FsFunctional>& parts, const Rational& scale = 1) {
  std::vector<FsVector::Entry> e;
  for (const auto& p : parts)
    for (const auto& x : p.coords().entries()) e.push_back({x.index, x.value * scale});
  return FsFunctional(FsVector::from_entries(std::move(e)));
}

class L1Evaluator final : public NormEvaluator {
 public:
  L1Evaluator(const FsVector& x, Mode mode) : NormEvaluator(x, mode) {
    prefix_.push_back(Scalar::in_mode(0, mode));
    for (const auto& a : abs_) prefix_.push_back(prefix_.back() + a);
  }
  Scalar interval(std::size_t lo, std::size_t hi) override { return prefix_[hi + 1] - prefix_[lo]; }
  FsFunctional interval_functional(std::size_t lo, std::size_t hi) override {
    std::vector<FsVector::Entry> e;
    for (std::size_t p = lo; p <= hi; ++p) e.push_back({idx_[p], Rational(sign_[p])});
    return FsFunctional(FsVector::from_entries(std::move(e)));
  }

 private:
  std::vector<Scalar> prefix_;
};

class C0Evaluator final : public NormEvaluator {
 public:
  C0Evaluator(const FsVector& x, Mode mode) : NormEvaluator(x, mode) {}
  Scalar interval(std::size_t lo, std::size_t hi) override { return abs_[argmax(lo, hi)]; }
  FsFunctional interval_functional(std::size_t lo, std::size_t hi) override {
    std::size_t p = argmax(lo, hi);
    return FsFunctional(FsVector::from_entries({{idx_[p], Rational(sign_[p])}}));
  }

 private:
  std::size_t argmax(std::size_t lo, std::size_t hi) const {
    std::size_t best = lo;
    for (std::size_t p = lo + 1; p <= hi; ++p)
      if (abs_[p] > abs_[best]) best = p;
    return best;
  }
};

// Least fixed point of N = max(sup norm, max over levels of theta * best admissible split),
// solved bottom-up over runs [lo, hi] of support positions. Pieces start at support positions and run
// to the next start; positions before the first start are dropped.
struct ScalarOps {
  using T = Scalar;
  std::vector<Scalar> theta;
  T add(const T& a, const T& b) const { return a + b; }
  T weigh(std::size_t l, const T& v) const { return theta[l] * v; }
};

struct DyadicOps {
  using T = detail::Wide;
  std::vector<unsigned> shift;
  T add(T a, T b) const { return detail::DyadicFrame::add(a, b); }
  T weigh(std::size_t l, T v) const { return detail::DyadicFrame::shr(v, shift[l]); }
};

class ImplicitEvaluator final : public NormEvaluator {
 public:
  ImplicitEvaluator(const NormSpace& space, const FsVector& x) : NormEvaluator(x, space.exact() ? Mode::exact : Mode::floating) {
    for (const auto& l : space.levels()) {
      auto t = make_tracker(l.family);
      levels_.push_back({detail::ChainGraph(*t, idx_), l.theta, Scalar::in_mode(l.theta, mode_)});
    }
    n_ = size();
    choice_.assign(n_ * n_, {});
    if (!(mode_ == Mode::exact && build_dyadic())) {
      ScalarOps ops;
      for (const auto& l : levels_) ops.theta.push_back(l.theta_s);
      build(ops, abs_, table_);
    }
  }

  Scalar interval(std::size_t lo, std::size_t hi) override { return table_[lo * n_ + hi]; }

  FsFunctional interval_functional(std::size_t lo, std::size_t hi) override {
    const Choice& c = choice_[lo * n_ + hi];
    if (c.level < 0) return FsFunctional(FsVector::from_entries({{idx_[c.arg], Rational(sign_[c.arg])}}));
    std::vector<FsFunctional> parts;
    for (std::size_t i = 0; i < c.starts.size(); ++i) {
      std::size_t end = i + 1 < c.starts.size() ? c.starts[i + 1] - 1 : hi;
      parts.push_back(interval_functional(c.starts[i], end));
    }
    return sum_of(parts, levels_[static_cast<std::size_t>(c.level)].theta);
  }

 private:
  struct Level {
    detail::ChainGraph graph;
    Rational theta;
    Scalar theta_s;
  };
  struct Choice {
    int level = -1;
    std::size_t arg = 0;
    std::vector<std::size_t> starts;
  };

  bool build_dyadic() {
    DyadicOps ops;
    for (const auto& l : levels_) {
      auto t = detail::dyadic_shift(l.theta);
      if (!t) return false;
      ops.shift.push_back(*t);
    }
    std::vector<Rational> a;
    for (const auto& v : abs_) a.push_back(v.rational());
    auto frame = detail::DyadicFrame::make(a, 0);
    if (!frame) return false;
    try {
      std::vector<detail::Wide> av, table;
      for (const auto& q : a) av.push_back(frame->from(q));
      build(ops, av, table);
      table_.clear();
      table_.reserve(table.size());
      for (auto v : table) table_.emplace_back(frame->to_rational(v));
      return true;
    } catch (const detail::Inexact&) {
      choice_.assign(n_ * n_, {});
      return false;
    }
  }

  // G[pair]: best sum of piece norms over chains continuing the pair's chain, last piece ending at hi.
  template <class Ops>
  void build(const Ops& ops, const std::vector<typename Ops::T>& absv, std::vector<typename Ops::T>& table) {
    using T = typename Ops::T;
    struct Top {
      bool valid = false;
      T value{};
      std::size_t p = 0, q = 0;
      std::uint32_t pair = 0;
    };
    const T zero = absv.empty() ? T{} : absv[0] - absv[0];
    table.assign(n_ * n_, zero);
    auto N = [&](std::size_t lo, std::size_t hi) -> T& { return table[lo * n_ + hi]; };
    std::vector<std::vector<T>> G(levels_.size());
    std::vector<std::vector<std::int32_t>> next(levels_.size());
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      G[l].assign(levels_[l].graph.size(), zero);
      next[l].assign(levels_[l].graph.size(), -1);
    }
    for (std::size_t hi = 0; hi < n_; ++hi) {
      std::vector<Top> suffix(levels_.size());
      std::size_t arg = hi;
      for (std::size_t lo = hi + 1; lo-- > 0;) {
        if (absv[lo] >= absv[arg]) arg = lo;
        T val = absv[arg];
        Choice ch{-1, arg, {}};
        for (std::size_t l = 0; l < levels_.size(); ++l) {
          const auto& g = levels_[l].graph;
          Top top;
          if (g.start[lo] >= 0) {
            for (const auto& e : g.out[static_cast<std::size_t>(g.start[lo])]) {
              if (e.q > hi) break;
              T cand = ops.add(N(lo, e.q - 1), G[l][e.to]);
              if (!top.valid || cand > top.value) top = {true, std::move(cand), lo, e.q, e.to};
            }
          }
          if (top.valid && (!suffix[l].valid || top.value > suffix[l].value)) suffix[l] = std::move(top);
          if (!suffix[l].valid) continue;
          T cand = ops.weigh(l, suffix[l].value);
          if (cand > val) {
            val = std::move(cand);
            ch.level = static_cast<int>(l);
            ch.starts = {suffix[l].p, suffix[l].q};
            for (std::int32_t p = next[l][suffix[l].pair]; p >= 0; p = next[l][static_cast<std::size_t>(p)])
              ch.starts.push_back(g.pos[static_cast<std::size_t>(p)]);
          }
        }
        N(lo, hi) = std::move(val);
        choice_[lo * n_ + hi] = std::move(ch);
        for (std::size_t l = 0; l < levels_.size(); ++l) {
          const auto& g = levels_[l].graph;
          for (std::uint32_t p : g.at[lo]) {
            T best = N(lo, hi);
            std::int32_t nx = -1;
            for (const auto& e : g.out[p]) {
              if (e.q > hi) break;
              T cand = ops.add(N(lo, e.q - 1), G[l][e.to]);
              if (cand > best) {
                best = std::move(cand);
                nx = static_cast<std::int32_t>(e.to);
              }
            }
            G[l][p] = std::move(best);
            next[l][p] = nx;
          }
        }
      }
    }
  }

  std::vector<Level> levels_;
  std::size_t n_ = 0;
  std::vector<Scalar> table_;
  std::vector<Choice> choice_;
};

// sup over k >= 2 successive intervals of (1/log2(k+1)) * sum of piece norms, in doubles.
class SchlumprechtEvaluator final : public NormEvaluator {
 public:
  explicit SchlumprechtEvaluator(const FsVector& x) : NormEvaluator(x, Mode::floating) { build(); }

  Scalar interval(std::size_t lo, std::size_t hi) override { return Scalar(table_[lo * n_ + hi]); }

  FsFunctional interval_functional(std::size_t lo, std::size_t hi) override {
    const Choice& c = choice_[lo * n_ + hi];
    if (c.k == 0) return FsFunctional(FsVector::from_entries({{idx_[c.arg], Rational(sign_[c.arg])}}));
    std::vector<FsFunctional> parts;
    for (std::size_t i = 0; i < c.starts.size(); ++i) {
      std::size_t end = i + 1 < c.starts.size() ? c.starts[i + 1] - 1 : hi;
      parts.push_back(interval_functional(c.starts[i], end));
    }
    return sum_of(parts, Rational(1.0 / std::log2(static_cast<double>(c.k) + 1.0)));
  }

 private:
  struct Choice {
    std::size_t k = 0;
    std::size_t arg = 0;
    std::vector<std::size_t> starts;
  };

  void build() {
    n_ = size();
    table_.assign(n_ * n_, 0.0);
    choice_.assign(n_ * n_, {});
    std::vector<double> w(n_ + 2, 0.0);
    for (std::size_t k = 1; k < w.size(); ++k) w[k] = 1.0 / std::log2(static_cast<double>(k) + 1.0);
    for (std::size_t hi = 0; hi < n_; ++hi) {
      // R[p][j]: best sum over at most j pieces covering [p..hi]; cut[p][j] is the end of the first piece.
      std::vector<std::vector<double>> R(hi + 1);
      std::vector<std::vector<std::size_t>> cut(hi + 1);
      std::size_t arg = hi;
      for (std::size_t lo = hi + 1; lo-- > 0;) {
        if (abs_[lo] >= abs_[arg]) arg = lo;
        double best = abs_[arg].to_double();
        Choice ch{0, arg, {}};
        const std::size_t len = hi - lo + 1;
        for (std::size_t c = lo; c < hi; ++c) {
          const double first = table_[lo * n_ + c];
          const auto& rest = R[c + 1];
          for (std::size_t k = 2; k <= len && k - 1 < rest.size(); ++k) {
            double cand = w[k] * (first + rest[k - 1]);
            if (cand > best) {
              best = cand;
              ch = {k, arg, {lo}};
              std::size_t p = c + 1, j = k - 1;
              for (;;) {
                ch.starts.push_back(p);
                std::size_t e = cut[p][j];
                if (e == npos) break;
                j = std::min(j - 1, hi - e);
                p = e + 1;
              }
            }
          }
        }
        table_[lo * n_ + hi] = best;
        choice_[lo * n_ + hi] = std::move(ch);
        R[lo].assign(len + 1, 0.0);
        cut[lo].assign(len + 1, npos);
        for (std::size_t j = 1; j <= len; ++j) {
          R[lo][j] = best;
          if (j == 1) continue;
          for (std::size_t c = lo; c < hi; ++c) {
            double cand = table_[lo * n_ + c] + R[c + 1][std::min(j - 1, hi - c)];
            if (cand > R[lo][j]) {
              R[lo][j] = cand;
              cut[lo][j] = c;
            }
          }
        }
      }
    }
  }

  std::size_t n_ = 0;
  std::vector<double> table_;
  std::vector<Choice> choice_;
};

// sup over at most n successive intervals of the sum of base norms.
class IntervalsEvaluator final : public NormEvaluator {
 public:
  IntervalsEvaluator(std::unique_ptr<NormEvaluator> base, unsigned n, const FsVector& x, Mode mode)
      : NormEvaluator(x, mode), base_(std::move(base)), n_(n) {}

  Scalar interval(std::size_t lo, std::size_t hi) override { return solve(lo, hi).value; }

  FsFunctional interval_functional(std::size_t lo, std::size_t hi) override {
    const auto& r = solve(lo, hi);
    std::vector<FsFunctional> parts;
    for (std::size_t i = 0; i < r.starts.size(); ++i) {
      std::size_t end = i + 1 < r.starts.size() ? r.starts[i + 1] - 1 : hi;
      parts.push_back(base_->interval_functional(r.starts[i], end));
    }
    return sum_of(parts);
  }

 private:
  struct Result {
    Scalar value;
    std::vector<std::size_t> starts;
  };

  const Result& solve(std::size_t lo, std::size_t hi) {
    auto key = std::make_pair(lo, hi);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::size_t len = hi - lo + 1;
    const std::size_t rmax = std::min<std::size_t>(n_, len);
    std::vector<std::vector<Scalar>> P(rmax + 1, std::vector<Scalar>(len));
    std::vector<std::vector<std::size_t>> cut(rmax + 1, std::vector<std::size_t>(len, npos));
    for (std::size_t r = 1; r <= rmax; ++r) {
      for (std::size_t p = hi + 1; p-- > lo;) {
        Scalar best = base_->interval(p, hi);
        if (r > 1) {
          for (std::size_t c = p; c < hi; ++c) {
            Scalar cand = base_->interval(p, c) + P[r - 1][c + 1 - lo];
            if (cand > best) {
              best = std::move(cand);
              cut[r][p - lo] = c;
            }
          }
        }
        P[r][p - lo] = std::move(best);
      }
    }
    Result res{P[rmax][0], {}};
    std::size_t p = lo, r = rmax;
    for (;;) {
      res.starts.push_back(p);
      std::size_t c = cut[r][p - lo];
      if (c == npos) break;
      p = c + 1;
      --r;
    }
    return memo_.emplace(key, std::move(res)).first->second;
  }

  std::unique_ptr<NormEvaluator> base_;
  unsigned n_;
  std::map<std::pair<std::size_t, std::size_t>, Result> memo_;
};

// sup over admissible successive intervals (minima in the family) of the sum of base norms.
class AssocEvaluator final : public NormEvaluator {
 public:
  AssocEvaluator(std::unique_ptr<NormEvaluator> base, std::shared_ptr<const Tracker> tracker, const FsVector& x, Mode mode)
      : NormEvaluator(x, mode), base_(std::move(base)), tracker_(std::move(tracker)) {}

  Scalar interval(std::size_t lo, std::size_t hi) override { return solve(lo, hi).value; }

  FsFunctional interval_functional(std::size_t lo, std::size_t hi) override {
    const auto& r = solve(lo, hi);
    std::vector<FsFunctional> parts;
    for (std::size_t i = 0; i < r.starts.size(); ++i) {
      std::size_t end = i + 1 < r.starts.size() ? r.starts[i + 1] - 1 : hi;
      parts.push_back(base_->interval_functional(r.starts[i], end));
    }
    return sum_of(parts);
  }

 private:
  struct Entry {
    Scalar value;
    std::size_t next;
    TrackState next_state;
  };
  using Memo = std::unordered_map<TrackState, Entry, TrackStateHash>;
  struct Result {
    Scalar value;
    std::vector<std::size_t> starts;
  };

  const Entry& A(Memo& memo, std::size_t q, const TrackState& s, std::size_t hi) {
    TrackState key = keyed(q, s);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Entry e{base_->interval(q, hi), npos, {}};
    for (std::size_t q2 = q + 1; q2 <= hi; ++q2) {
      auto s2 = tracker_->push(s, idx_[q2]);
      if (!s2) continue;
      const Entry& sub = A(memo, q2, *s2, hi);
      Scalar cand = base_->interval(q, q2 - 1) + sub.value;
      if (cand > e.value) {
        e.value = std::move(cand);
        e.next = q2;
        e.next_state = *s2;
      }
    }
    return memo.emplace(std::move(key), std::move(e)).first->second;
  }

  const Result& solve(std::size_t lo, std::size_t hi) {
    auto key = std::make_pair(lo, hi);
    if (auto it = results_.find(key); it != results_.end()) return it->second;
    Memo& memo = memos_[hi];
    Result best{Scalar::in_mode(0, mode_), {}};
    bool found = false;
    TrackState start_state;
    for (std::size_t p = lo; p <= hi; ++p) {
      auto s1 = tracker_->push(tracker_->initial(), idx_[p]);
      if (!s1) continue;
      const Entry& e = A(memo, p, *s1, hi);
      if (!found || e.value > best.value) {
        found = true;
        best.value = e.value;
        best.starts = {p};
        start_state = *s1;
      }
    }
    if (found) {
      std::size_t q = best.starts[0];
      TrackState s = start_state;
      for (;;) {
        const Entry& e = A(memo, q, s, hi);
        if (e.next == npos) break;
        best.starts.push_back(e.next);
        q = e.next;
        s = e.next_state;
      }
    }
    return results_.emplace(key, std::move(best)).first->second;
  }

  std::unique_ptr<NormEvaluator> base_;
  std::shared_ptr<const Tracker> tracker_;
  std::map<std::size_t, Memo> memos_;
  std::map<std::pair<std::size_t, std::size_t>, Result> results_;
};

// sup over pairwise disjoint sets with minima in the family; exhaustive over set partitions (3^n).
class AllowableEvaluator final : public NormEvaluator {
 public:
  AllowableEvaluator(NormSpace base, std::shared_ptr<const Tracker> tracker, const FsVector& x, Mode mode, NormLimits limits)
      : NormEvaluator(x, mode), base_(std::move(base)), tracker_(std::move(tracker)), limits_(limits) {
    if (size() > limits.max_allowable_support)
      throw ResourceError("allowable associated norm limited to support " + std::to_string(limits.max_allowable_support) + ", got " +
                          std::to_string(size()));
  }

  Scalar interval(std::size_t lo, std::size_t hi) override { return solve(lo, hi).value; }

  FsFunctional interval_functional(std::size_t lo, std::size_t hi) override {
    const auto& r = solve(lo, hi);
    std::vector<FsFunctional> parts;
    for (auto mask : r.blocks) parts.push_back(block(mask).functional);
    return sum_of(parts);
  }

 private:
  struct Block {
    Scalar value;
    FsFunctional functional;
  };
  struct Entry {
    Scalar value;
    std::uint32_t chosen;  // 0: lowest position dropped
    TrackState next_state;
  };
  struct Result {
    Scalar value;
    std::vector<std::uint32_t> blocks;
  };

  const Block& block(std::uint32_t mask) {
    if (auto it = blocks_.find(mask); it != blocks_.end()) return it->second;
    std::vector<FsVector::Entry> e;
    for (std::size_t p = 0; p < size(); ++p)
      if (mask >> p & 1u) e.push_back(x_.entries()[p]);
    auto ev = make_evaluator(base_, FsVector::from_entries(std::move(e)), limits_);
    return blocks_.emplace(mask, Block{ev->value(), ev->norming_functional()}).first->second;
  }

  const Entry& F(std::uint32_t mask, const TrackState& s) {
    TrackState key = keyed(mask, s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Entry e{Scalar::in_mode(0, mode_), 0, {}};
    bool found = false;
    if (mask != 0) {
      std::uint32_t low = mask & (~mask + 1);
      std::uint32_t rest = mask ^ low;
      std::size_t u = static_cast<std::size_t>(__builtin_ctz(low));
      if (s == tracker_->initial()) {
        e = {F(rest, s).value, 0, s};
        found = true;
      }
      if (auto s2 = tracker_->push(s, idx_[u])) {
        // Enumerate every subset of rest to join u's block.
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
          const Entry& tail = F(rest ^ sub, *s2);
          Scalar cand = block(sub | low).value + tail.value;
          if (!found || cand > e.value) {
            e = {std::move(cand), sub | low, *s2};
            found = true;
          }
          if (sub == 0) break;
        }
      }
    } else {
      found = true;
    }
    return memo_.emplace(std::move(key), std::move(e)).first->second;
  }

  const Result& solve(std::size_t lo, std::size_t hi) {
    auto key = std::make_pair(lo, hi);
    if (auto it = results_.find(key); it != results_.end()) return it->second;
    std::uint32_t mask = 0;
    for (std::size_t p = lo; p <= hi; ++p) mask |= 1u << p;
    Result r{F(mask, tracker_->initial()).value, {}};
    TrackState s = tracker_->initial();
    while (mask != 0) {
      const Entry& e = F(mask, s);
      if (e.chosen == 0) {
        mask &= mask - 1;
      } else {
        r.blocks.push_back(e.chosen);
        mask &= ~e.chosen;
      }
      s = e.next_state;
    }
    return results_.emplace(key, std::move(r)).first->second;
  }

  NormSpace base_;
  std::shared_ptr<const Tracker> tracker_;
  NormLimits limits_;
  std::unordered_map<std::uint32_t, Block> blocks_;
  std::unordered_map<TrackState, Entry, TrackStateHash> memo_;
  std::map<std::pair<std::size_t, std::size_t>, Result> results_;
};

}  // namespace

NormEvaluator::NormEvaluator(const FsVector& x, Mode mode) : x_(x), mode_(mode) {
  for (const auto& e : x.entries()) {
    idx_.push_back(e.index);
    abs_.push_back(Scalar::in_mode(::abs(e.value), mode));
    sign_.push_back(sgn(e.value));
  }
}

Scalar NormEvaluator::value() {
  if (idx_.empty()) return Scalar::in_mode(0, mode_);
  return interval(0, idx_.size() - 1);
}

FsFunctional NormEvaluator::norming_functional() {
  if (idx_.empty()) return {};
  return interval_functional(0, idx_.size() - 1);
}

std::unique_ptr<NormEvaluator> make_evaluator(const NormSpace& space, const FsVector& x, const NormLimits& limits) {
  const Mode mode = space.exact() ? Mode::exact : Mode::floating;
  switch (space.kind()) {
    case NormSpace::Kind::l1:
      return std::make_unique<L1Evaluator>(x, mode);
    case NormSpace::Kind::c0:
      return std::make_unique<C0Evaluator>(x, mode);
    default:
      break;
  }
  if (x.size() > limits.max_support)
    throw ResourceError("support " + std::to_string(x.size()) + " exceeds bound " + std::to_string(limits.max_support));
  switch (space.kind()) {
    case NormSpace::Kind::tsirelson:
      return std::make_unique<ImplicitEvaluator>(space, x);
    case NormSpace::Kind::schlumprecht:
      return std::make_unique<SchlumprechtEvaluator>(x);
    case NormSpace::Kind::intervals_n:
      return std::make_unique<IntervalsEvaluator>(make_evaluator(space.base(), x, limits), space.n(), x, mode);
    case NormSpace::Kind::assoc:
      if (space.variant() == AssocVariant::allowable)
        return std::make_unique<AllowableEvaluator>(space.base(), make_tracker(space.family()), x, mode, limits);
      return std::make_unique<AssocEvaluator>(make_evaluator(space.base(), x, limits), make_tracker(space.family()), x, mode);
    default:
      break;
  }
  throw UnsupportedError("no evaluator for " + space.str());
}

Scalar norm(const NormSpace& space, const FsVector& x, const NormLimits& limits) { return make_evaluator(space, x, limits)->value(); }

Scalar norm_n(const NormSpace& base, unsigned n, const FsVector& y, const NormLimits& limits) {
  return norm(NormSpace::intervals_n(base, n), y, limits);
}

Scalar assoc_norm(const NormSpace& base, const Family& family, const FsVector& x, AssocVariant variant, const NormLimits& limits) {
  return norm(NormSpace::assoc(base, family, variant), x, limits);
}

Scalar assoc_norm(const NormSpace& base, const Ordinal& alpha, const FsVector& x, AssocVariant variant, const NormLimits& limits) {
  return assoc_norm(base, Family::schreier(alpha), x, variant, limits);
}

FsFunctional norming_functional(const NormSpace& space, const FsVector& x, const NormLimits& limits) {
  return make_evaluator(space, x, limits)->norming_functional();
}

}  // namespace dlab
