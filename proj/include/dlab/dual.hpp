#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include <json.hpp>

#include "dlab/norm.hpp"

namespace dlab {

struct Interval {
  std::uint32_t lo;
  std::uint32_t hi;
};

struct Bounds {
  Scalar lower;
  Scalar upper;
  bool inconclusive = false;  // gap exceeds the requested tolerance

  bool exact() const { return lower == upper; }
  nlohmann::json to_json() const;
};

struct DualOptions {
  double tolerance = 0.0;
  // Intervals with more support positions only get the cheap lower-bound candidates.
  std::size_t full_candidates_up_to = 16;
  NormLimits limits{};
};

// Two-sided bounds on the dual norm of every restriction of phi to a run of its support positions.
// Upper bounds come from a gauge recursion over the norming set, lower bounds from phi(x)/||x|| over
// candidate vectors x; both are exact for L1 and C0.
class DualEvaluator {
 public:
  DualEvaluator(const NormSpace& space, const FsFunctional& phi, const DualOptions& options = {});
  ~DualEvaluator();

  std::size_t size() const;
  const std::vector<std::uint32_t>& indices() const;
  Scalar upper(std::size_t lo, std::size_t hi);
  Scalar lower(std::size_t lo, std::size_t hi);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Certified upper bound on the dual norm of phi.
Scalar dual_upper(const NormSpace& space, const FsFunctional& phi, const DualOptions& options = {});

Bounds dual_norm(const NormSpace& space, const FsFunctional& phi, std::optional<Interval> section = {},
                 const DualOptions& options = {});
// sup over at most n successive intervals of the sum of piece dual norms.
Bounds dual_intervals_norm(const NormSpace& space, const FsFunctional& phi, unsigned n, std::optional<Interval> section = {},
                           const DualOptions& options = {});
// sup over admissible successive intervals of the sum of piece dual norms.
Bounds dual_assoc_norm(const NormSpace& space, const FsFunctional& phi, const Family& family, std::optional<Interval> section = {},
                       const DualOptions& options = {});

// Primal norm induced by the dual associated norm: sup of phi(x) over phi with dual associated norm <= 1.
// Upper bound: min over admissible covers of x of the largest piece norm. Lower: candidate functionals.
Bounds primal_from_dual(const NormSpace& space, const FsVector& x, const Family& family, const DualOptions& options = {});
// Same with at most n successive intervals in place of admissible families.
Bounds primal_from_dual_n(const NormSpace& space, const FsVector& x, unsigned n, const DualOptions& options = {});

}  // namespace dlab
