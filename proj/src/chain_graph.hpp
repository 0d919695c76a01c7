#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dlab/errors.hpp"
#include "dlab/tracker.hpp"

namespace dlab::detail {

// Reachable (position, tracker state) pairs for chains of starts at support positions. A pair stands for a
// chain whose last start is at its position; edges append the next start.
struct ChainGraph {
  struct Edge {
    std::uint32_t q;
    std::uint32_t to;
  };
  std::vector<std::uint32_t> pos;
  std::vector<std::vector<Edge>> out;        // ascending in q
  std::vector<std::int32_t> start;           // one-start chain at each position, or -1
  std::vector<std::vector<std::uint32_t>> at;  // pairs by position

  ChainGraph(const Tracker& t, const std::vector<std::uint32_t>& idx, std::size_t max_edges = std::size_t{1} << 24) {
    const std::size_t n = idx.size();
    start.assign(n, -1);
    at.assign(n, {});
    std::unordered_map<TrackState, std::uint32_t, TrackStateHash> states;
    std::vector<TrackState> state_of;
    std::unordered_map<std::uint64_t, std::int64_t> step;  // (state, position) -> state or -1
    std::unordered_map<std::uint64_t, std::uint32_t> pair;
    std::vector<std::uint32_t> sid_of, stack;
    auto intern = [&](TrackState s) {
      auto [it, fresh] = states.emplace(std::move(s), static_cast<std::uint32_t>(state_of.size()));
      if (fresh) state_of.push_back(it->first);
      return it->second;
    };
    auto pair_id = [&](std::uint32_t q, std::uint32_t sid) {
      const std::uint64_t key = (std::uint64_t{q} << 32) | sid;
      auto [it, fresh] = pair.emplace(key, static_cast<std::uint32_t>(pos.size()));
      if (fresh) {
        pos.push_back(q);
        sid_of.push_back(sid);
        out.emplace_back();
        at[q].push_back(it->second);
        stack.push_back(it->second);
      }
      return it->second;
    };
    for (std::size_t q = 0; q < n; ++q)
      if (auto s = t.push(t.initial(), idx[q])) start[q] = static_cast<std::int32_t>(pair_id(static_cast<std::uint32_t>(q), intern(*s)));
    std::size_t edges = 0;
    while (!stack.empty()) {
      const std::uint32_t p = stack.back();
      stack.pop_back();
      const std::uint32_t sid = sid_of[p];
      std::vector<Edge> e;
      for (std::uint32_t q2 = pos[p] + 1; q2 < n; ++q2) {
        const std::uint64_t key = (std::uint64_t{sid} << 32) | q2;
        auto it = step.find(key);
        if (it == step.end()) {
          auto s2 = t.push(state_of[sid], idx[q2]);
          it = step.emplace(key, s2 ? static_cast<std::int64_t>(intern(std::move(*s2))) : -1).first;
        }
        if (it->second < 0) continue;
        e.push_back({q2, pair_id(q2, static_cast<std::uint32_t>(it->second))});
      }
      edges += e.size();
      if (edges > max_edges) throw ResourceError("admissible chain graph exceeds its budget");
      out[p] = std::move(e);
    }
  }

  std::size_t size() const { return pos.size(); }
};

}  // namespace dlab::detail
