#include "dlab/equivalence.hpp"

#include <set>

#include "dlab/errors.hpp"

namespace dlab {

namespace {

FsVector combine(const std::vector<FsVector>& xs, const std::vector<Rational>& a) {
  FsVector s;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (a[i] != 0) s = s + xs[i].scaled(a[i]);
  return s;
}

// Lower bound from psi = sum_i psi_i with psi_i supported on block i:
// ||sum a_i x_i|| >= sum |a_i| |psi(x_i)| / ||psi||*, by unconditionality.
Scalar functional_bound(const NormSpace& space, const std::vector<FsVector>& xs, const FsFunctional& psi, const DualOptions& opt,
                        Mode mode) {
  Scalar u = dual_upper(space, psi, opt);
  if (u.sign() <= 0) return Scalar::in_mode(0, mode);
  std::optional<Rational> m;
  for (const auto& x : xs) {
    Rational v = ::abs(psi(x));
    if (!m || v < *m) m = v;
  }
  return Scalar::in_mode(*m, mode) / u;
}

FsFunctional piecewise(const FsFunctional& g, const std::vector<FsVector>& xs) {
  FsFunctional out;
  for (const auto& x : xs) out = out + g.restricted(x.support());
  return out;
}

}  // namespace

void require_block_sequence(const std::vector<FsVector>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].empty()) throw DomainError("zero block");
    if (i > 0 && xs[i - 1].max_index() >= xs[i].min_index()) throw DomainError("blocks are not successive");
  }
}

void require_disjoint(const std::vector<FsVector>& xs) {
  std::set<std::uint32_t> seen;
  for (const auto& x : xs) {
    if (x.empty()) throw DomainError("zero block");
    for (const auto& e : x.entries())
      if (!seen.insert(e.index).second) throw DomainError("block supports overlap");
  }
}

EquivalenceBounds l1_lower_value(const NormSpace& space, const std::vector<FsVector>& xs, const EquivalenceOptions& options) {
  if (options.successive)
    require_block_sequence(xs);
  else
    require_disjoint(xs);
  const Mode mode = space.exact() ? Mode::exact : Mode::floating;
  const std::size_t k = xs.size();
  if (k == 0) throw DomainError("empty block sequence");
  const NormLimits& lim = options.dual.limits;

  std::vector<Scalar> single;
  for (const auto& x : xs) single.push_back(norm(space, x, lim));

  EquivalenceBounds out{Scalar::in_mode(0, mode), single[0], {}};
  out.witness.assign(k, Rational(0));
  out.witness[0] = 1;
  for (std::size_t i = 1; i < k; ++i)
    if (single[i] < out.upper) {
      out.upper = single[i];
      out.witness.assign(k, Rational(0));
      out.witness[i] = 1;
    }

  auto probe = [&](const std::vector<std::size_t>& sub) {
    std::vector<Rational> a(k, Rational(0));
    const Rational w(1, static_cast<long>(sub.size()));
    for (auto i : sub) a[i] = w;
    Scalar v = norm(space, combine(xs, a), lim);
    if (v < out.upper) {
      out.upper = v;
      out.witness = a;
    }
  };
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < k; ++i) all.push_back(i);
  if (k > 1) probe(all);

  // Bimonotone: ||sum a_i x_i|| >= max |a_i| ||x_i|| >= min ||x_i|| / k.
  Scalar lower = single[0];
  for (const auto& s : single) lower = min(lower, s);
  lower = lower / Scalar::in_mode(static_cast<long>(k), mode);

  FsFunctional psi;
  for (const auto& x : xs) psi = psi + norming_functional(space, x, lim);
  lower = max(lower, functional_bound(space, xs, psi, options.dual, mode));
  auto witness_bound = [&] {
    FsFunctional g = piecewise(norming_functional(space, combine(xs, out.witness), lim), xs);
    lower = max(lower, functional_bound(space, xs, g, options.dual, mode));
  };
  witness_bound();

  std::optional<Scalar> target;
  if (options.decide_at) target = Scalar::in_mode(*options.decide_at, mode);
  auto decided = [&] { return target && (!(lower < *target) || out.upper < *target); };

  // The minimum over the l1 sphere is attained on a face; barycenters of block subsets are the natural probes.
  if (!decided()) {
    if (k <= options.full_subsets_up_to) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k) - 1 && !decided(); ++mask) {
        if ((mask & (mask - 1)) == 0) continue;
        std::vector<std::size_t> sub;
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1) sub.push_back(i);
        probe(sub);
      }
    } else if (options.successive) {
      // Uniform runs of consecutive blocks, all read off one evaluator of sum x_i.
      FsVector sum;
      for (const auto& x : xs) sum = sum + x;
      auto ev = make_evaluator(space, sum, lim);
      std::vector<std::size_t> first(k), last(k);
      std::size_t pos = 0;
      for (std::size_t i = 0; i < k; ++i) {
        first[i] = pos;
        pos += xs[i].size();
        last[i] = pos - 1;
      }
      for (std::size_t lo = 0; lo < k && !decided(); ++lo)
        for (std::size_t hi = lo + 1; hi < k && !decided(); ++hi) {
          const Rational w(1, static_cast<long>(hi - lo + 1));
          Scalar v = ev->interval(first[lo], last[hi]) * Scalar::in_mode(w, mode);
          if (v < out.upper) {
            out.upper = v;
            out.witness.assign(k, Rational(0));
            for (std::size_t i = lo; i <= hi; ++i) out.witness[i] = w;
          }
        }
    } else {
      for (std::size_t lo = 0; lo < k && !decided(); ++lo)
        for (std::size_t hi = lo + 1; hi < k && !decided(); ++hi) {
          std::vector<std::size_t> sub;
          for (std::size_t i = lo; i <= hi; ++i) sub.push_back(i);
          probe(sub);
        }
    }
    witness_bound();
  }

  out.lower = min(lower, out.upper);
  return out;
}

Scalar c0_upper_value(const NormSpace& space, const std::vector<FsVector>& xs, const NormLimits& limits) {
  require_block_sequence(xs);
  FsVector s;
  for (const auto& x : xs) s = s + x;
  return norm(space, s, limits);
}

}  // namespace dlab
