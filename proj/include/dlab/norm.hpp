#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "dlab/scalar.hpp"
#include "dlab/space.hpp"
#include "dlab/vector.hpp"

namespace dlab {

struct NormLimits {
  std::size_t max_support = 256;
  std::size_t max_allowable_support = 20;
};

// Norm of one vector and of all its restrictions to runs of consecutive support positions.
class NormEvaluator {
 public:
  virtual ~NormEvaluator() = default;

  std::size_t size() const { return idx_.size(); }
  const std::vector<std::uint32_t>& indices() const { return idx_; }
  const FsVector& vector() const { return x_; }

  // Norm of x restricted to support positions lo..hi, inclusive.
  virtual Scalar interval(std::size_t lo, std::size_t hi) = 0;
  // f in the dual unit ball, supported in positions lo..hi, with f(x) equal to interval(lo, hi).
  virtual FsFunctional interval_functional(std::size_t lo, std::size_t hi) = 0;

  Scalar value();
  FsFunctional norming_functional();

 protected:
  NormEvaluator(const FsVector& x, Mode mode);

  FsVector x_;
  Mode mode_;
  std::vector<std::uint32_t> idx_;
  std::vector<Scalar> abs_;
  std::vector<int> sign_;
};

std::unique_ptr<NormEvaluator> make_evaluator(const NormSpace& space, const FsVector& x, const NormLimits& limits = {});

Scalar norm(const NormSpace& space, const FsVector& x, const NormLimits& limits = {});
Scalar norm_n(const NormSpace& base, unsigned n, const FsVector& y, const NormLimits& limits = {});
Scalar assoc_norm(const NormSpace& base, const Family& family, const FsVector& x, AssocVariant variant,
                  const NormLimits& limits = {});
Scalar assoc_norm(const NormSpace& base, const Ordinal& alpha, const FsVector& x, AssocVariant variant,
                  const NormLimits& limits = {});
FsFunctional norming_functional(const NormSpace& space, const FsVector& x, const NormLimits& limits = {});

}  // namespace dlab
