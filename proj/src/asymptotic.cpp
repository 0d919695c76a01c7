#include "dlab/asymptotic.hpp"

#include <functional>
#include <map>

#include "dlab/errors.hpp"
#include "dlab/family_ops.hpp"

namespace dlab {

std::string to_string(CheckOutcome c) {
  switch (c) {
    case CheckOutcome::pass:
      return "pass";
    case CheckOutcome::fail:
      return "fail";
    case CheckOutcome::inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::vector<Rational> sup_scaled(const std::vector<Rational>& a) {
  Rational m = 0;
  for (const auto& x : a) m = std::max<Rational>(m, ::abs(x));
  std::vector<Rational> out;
  for (const auto& x : a) out.push_back(m == 0 ? x : Rational(x / m));
  return out;
}

namespace {

nlohmann::json rationals(const std::vector<Rational>& a) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : a) j.push_back(to_string(x));
  return j;
}

bool is_normalized(const NormSpace& space, const FsVector& x, const NormLimits& lim) {
  Scalar v = norm(space, x, lim);
  return v.exact() ? v == Scalar(1) : approx_equal(v, Scalar(1.0), kFloatTolerance);
}

}  // namespace

nlohmann::json SpreadingResult::to_json() const {
  nlohmann::json j{{"outcome", to_string(outcome)}, {"sets_checked", sets_checked}};
  if (witness_set) {
    j["witness_set"] = witness_set->str();
    j["witness_coefficients"] = rationals(witness_coefficients);
  }
  if (witness_value) j["witness_value"] = witness_value->to_json();
  return j;
}

SpreadingResult check_spreading_model(const NormSpace& space, const std::vector<FsVector>& blocks, const Ordinal& alpha,
                                      const Rational& C, std::uint32_t universe, const EquivalenceOptions& options) {
  if (C < 1) throw DomainError("C must be >= 1");
  if (blocks.size() < universe) throw DomainError("fewer blocks than the universe");
  std::vector<FsVector> used(blocks.begin(), blocks.begin() + universe);
  require_block_sequence(used);
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!is_normalized(space, used[i], options.dual.limits))
      throw PreconditionError("block " + std::to_string(i + 1) + " is not normalized");

  const Family fam = Family::schreier(alpha);
  EquivalenceOptions opt = options;
  opt.decide_at = 1 / C;
  const Mode mode = space.exact() ? Mode::exact : Mode::floating;
  const Scalar target = Scalar::in_mode(1 / C, mode);
  SpreadingResult r;
  for (const auto& f : enumerate(fam, universe)) {
    if (f.empty() || !is_maximal(fam, f, universe)) continue;
    ++r.sets_checked;
    if (f.size() == 1) continue;
    std::vector<FsVector> xs;
    for (auto m : f.elements()) xs.push_back(used[m - 1]);
    auto eb = l1_lower_value(space, xs, opt);
    CheckOutcome o = eb.upper < target ? CheckOutcome::fail : eb.lower < target ? CheckOutcome::inconclusive : CheckOutcome::pass;
    if (o == CheckOutcome::pass) continue;
    if (o == CheckOutcome::fail || r.outcome == CheckOutcome::pass) {
      r.outcome = o;
      r.witness_set = f;
      r.witness_coefficients = sup_scaled(eb.witness);
      r.witness_value = Bounds{eb.lower, eb.upper};
    }
    if (o == CheckOutcome::fail) break;
  }
  return r;
}

nlohmann::json AsymptoticityResult::to_json() const {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& s : witness) w.push_back(s.str());
  return {{"C_lower", lower.str()},
          {"C_upper", upper.str()},
          {"exact", exact()},
          {"families", families},
          {"witness_family", w},
          {"witness_coefficients", rationals(witness_coefficients)}};
}

std::vector<std::vector<FinSet>> asymptoticity_corpus(const Ordinal& alpha, std::uint32_t universe, AssocVariant variant) {
  const Family fam = Family::schreier(alpha);
  std::vector<std::vector<FinSet>> out;
  std::vector<std::vector<std::uint32_t>> sets;
  std::vector<std::uint32_t> mins;
  if (variant == AssocVariant::admissible) {
    // Element p may be skipped, open a new interval, or extend the interval ending at p-1.
    std::function<void(std::uint32_t, bool)> rec = [&](std::uint32_t p, bool open) {
      if (p > universe) {
        if (!sets.empty()) {
          std::vector<FinSet> fam_sets;
          for (const auto& s : sets) fam_sets.emplace_back(s);
          out.push_back(std::move(fam_sets));
        }
        return;
      }
      rec(p + 1, false);
      mins.push_back(p);
      if (fam.contains(mins)) {
        sets.push_back({p});
        rec(p + 1, true);
        sets.pop_back();
      }
      mins.pop_back();
      if (open) {
        sets.back().push_back(p);
        rec(p + 1, true);
        sets.back().pop_back();
      }
    };
    rec(1, false);
  } else {
    // Element p is unused, joins an existing set, or opens a new one; minima appear in increasing order.
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t p) {
      if (p > universe) {
        if (!sets.empty()) {
          std::vector<FinSet> fam_sets;
          for (const auto& s : sets) fam_sets.emplace_back(s);
          out.push_back(std::move(fam_sets));
        }
        return;
      }
      rec(p + 1);
      for (auto& s : sets) {
        s.push_back(p);
        rec(p + 1);
        s.pop_back();
      }
      mins.push_back(p);
      if (fam.contains(mins)) {
        sets.push_back({p});
        rec(p + 1);
        sets.pop_back();
      }
      mins.pop_back();
    };
    rec(1);
  }
  return out;
}

AsymptoticityResult measure_asymptoticity(const NormSpace& space, const Ordinal& alpha, std::uint32_t universe, AssocVariant variant,
                                          const AsymptoticityOptions& options) {
  if (variant == AssocVariant::allowable && universe > options.max_allowable_universe)
    throw ResourceError("allowable corpus limited to universe " + std::to_string(options.max_allowable_universe));
  const Mode mode = space.exact() ? Mode::exact : Mode::floating;
  const auto& lim = options.equivalence.dual.limits;
  EquivalenceOptions opt = options.equivalence;
  opt.successive = variant == AssocVariant::admissible;

  std::map<std::vector<std::uint32_t>, FsVector> normalized;
  auto block = [&](const FinSet& s) -> const FsVector& {
    std::vector<std::uint32_t> key(s.elements().begin(), s.elements().end());
    auto it = normalized.find(key);
    if (it != normalized.end()) return it->second;
    FsVector x = FsVector::indicator(s);
    Scalar v = norm(space, x, lim);
    Rational r = v.exact() ? v.rational() : Rational(v.to_double());
    return normalized.emplace(std::move(key), x.scaled(1 / r)).first->second;
  };

  AsymptoticityResult res;
  res.lower = res.upper = Scalar::in_mode(1, mode);
  for (const auto& fam : asymptoticity_corpus(alpha, universe, variant)) {
    ++res.families;
    if (fam.size() == 1) continue;
    std::vector<FsVector> xs;
    for (const auto& s : fam) xs.push_back(block(s));
    auto eb = l1_lower_value(space, xs, opt);
    Scalar c_lo = Scalar::in_mode(1, mode) / eb.upper;
    Scalar c_hi = Scalar::in_mode(1, mode) / eb.lower;
    if (c_lo > res.lower) {
      res.lower = c_lo;
      res.witness = fam;
      res.witness_coefficients = sup_scaled(eb.witness);
    }
    res.upper = max(res.upper, c_hi);
  }
  return res;
}

}  // namespace dlab
