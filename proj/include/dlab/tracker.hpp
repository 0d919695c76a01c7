#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "dlab/family.hpp"

namespace dlab {

using TrackState = std::vector<std::int64_t>;

struct TrackStateHash {
  std::size_t operator()(const TrackState& s) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : s) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Online membership automaton for a hereditary family: feeding the elements of F in increasing
// order keeps a state exactly while the prefix read so far is a member. Equal states have equal futures.
class Tracker {
 public:
  virtual ~Tracker() = default;
  virtual TrackState initial() const { return {0}; }
  virtual std::optional<TrackState> push(const TrackState& state, std::uint32_t x) const = 0;
};

// Throws UnsupportedError for families without a hereditary automaton (unchecked explicit, derivative, nothing).
std::shared_ptr<const Tracker> make_tracker(const Family& fam);

bool tracker_accepts(const Tracker& t, std::span<const std::uint32_t> f);

}  // namespace dlab
