#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dlab/norm.hpp"
#include "dlab/scalar.hpp"
#include "dlab/space.hpp"
#include "dlab/vector.hpp"

namespace dlab {

// Items separated by ';':
//   e<n>              basis vector
//   basis(a,b)        e_a, ..., e_b
//   int(a,b)          average over the interval [a,b]
//   avg(<fam>,m,...)  average over the longest interval starting at m inside the family, one item per m
//   [[i,"p/q"],...]   explicit vector
struct CorpusItem {
  std::string id;
  FsVector vector;
};

std::vector<CorpusItem> parse_corpus(std::string_view text, std::size_t max_support = 128);
// Coordinates of each item are read in the block basis (u_1, u_2, ...).
std::vector<CorpusItem> in_block_basis(const std::vector<CorpusItem>& items, const std::vector<FsVector>& basis);

struct DistortionEntry {
  std::string id;
  FsVector normalized;
  Scalar base_norm;
  Scalar derived_norm;
  Scalar ratio;
};

struct DistortionReport {
  std::string space;
  std::string derived;
  std::string corpus;
  bool block_basis = false;
  std::vector<DistortionEntry> entries;
  std::size_t argmin = 0, argmax = 0;
  Scalar ratio_min, ratio_max, lambda;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

struct DistortionOptions {
  NormLimits limits;
  std::size_t max_support = 128;
  unsigned threads = 0;  // 0: hardware concurrency
};

DistortionReport distortion_scan(const NormSpace& space, const NormSpace& derived, std::string_view corpus,
                                 const std::optional<std::vector<FsVector>>& block_basis = std::nullopt,
                                 const DistortionOptions& options = {});

}  // namespace dlab
