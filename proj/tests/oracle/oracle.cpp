#include "oracle.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>

namespace oracle {

Set from_mask(std::uint64_t mask) {
  Set s;
  for (std::uint32_t i = 0; i < 64; ++i)
    if (mask >> i & 1) s.push_back(i + 1);
  return s;
}

bool s1_closed(const Set& f) { return f.empty() || f.size() <= f.front(); }

bool s1_derived(const Set& f, unsigned k) { return f.empty() || f.size() + k <= f.front(); }

bool schreier(const Set& f, unsigned n) {
  if (f.empty()) return true;
  if (n == 0) return f.size() == 1;
  if (n == 1) return s1_closed(f);
  // fewest runs covering f[i..]
  std::size_t k = f.size();
  std::vector<std::size_t> best(k + 1, SIZE_MAX);
  best[k] = 0;
  for (std::size_t i = k; i-- > 0;)
    for (std::size_t j = i + 1; j <= k; ++j) {
      if (best[j] == SIZE_MAX) continue;
      Set run(f.begin() + i, f.begin() + j);
      if (schreier(run, n - 1)) best[i] = std::min(best[i], best[j] + 1);
    }
  return best[0] <= f.front();
}

namespace {

Q absq(const Q& q) { return q < 0 ? Q(-q) : q; }

}  // namespace

Vec restrict(const Vec& x, std::size_t lo, std::size_t hi) {
  Vec y;
  y.e.assign(x.e.begin() + lo, x.e.begin() + hi + 1);
  return y;
}

Q c0(const Vec& x) {
  Q m = 0;
  for (auto& [i, v] : x.e) m = std::max(m, absq(v));
  return m;
}

Q l1(const Vec& x) {
  Q s = 0;
  for (auto& [i, v] : x.e) s += absq(v);
  return s;
}

Q tsirelson(const Vec& x, const std::vector<Level>& levels) {
  std::size_t k = x.e.size();
  if (k == 0) return 0;
  if (k > 16) throw std::length_error("oracle support too large");
  // N[lo][hi] over support positions; pieces start at chosen positions and run to the next start.
  std::vector<std::vector<Q>> cur(k, std::vector<Q>(k));
  for (std::size_t lo = 0; lo < k; ++lo)
    for (std::size_t hi = lo; hi < k; ++hi) cur[lo][hi] = c0(restrict(x, lo, hi));
  const std::vector<std::vector<Q>> sup = cur;
  for (;;) {
    auto next = sup;
    for (std::size_t lo = 0; lo < k; ++lo)
      for (std::size_t hi = lo; hi < k; ++hi) {
        std::size_t len = hi - lo + 1;
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << len); ++mask) {
          Set mins;
          std::vector<std::size_t> starts;
          for (std::size_t b = 0; b < len; ++b)
            if (mask >> b & 1) {
              starts.push_back(lo + b);
              mins.push_back(x.e[lo + b].first);
            }
          Q sum = 0;
          for (std::size_t t = 0; t < starts.size(); ++t) {
            std::size_t end = t + 1 < starts.size() ? starts[t + 1] - 1 : hi;
            sum += cur[starts[t]][end];
          }
          for (const auto& l : levels)
            if (l.admissible(mins)) next[lo][hi] = std::max(next[lo][hi], Q(l.theta * sum));
        }
      }
    if (next == cur) return cur[0][k - 1];
    cur = std::move(next);
  }
}

Q tsirelson_s(const Vec& x, unsigned n, const Q& theta) {
  return tsirelson(x, {{[n](const Set& f) { return schreier(f, n); }, theta}});
}

namespace {

// Nonempty sets of piece starts among positions 0..k-1; each piece runs to the next start, the last to k-1.
template <class F>
void for_each_start_set(std::size_t k, F&& f) {
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << k); ++mask) {
    std::vector<std::size_t> starts;
    for (std::size_t b = 0; b < k; ++b)
      if (mask >> b & 1) starts.push_back(b);
    f(starts);
  }
}

Q split_sum(const Vec& x, const std::vector<std::size_t>& starts, const Norm& base) {
  Q sum = 0;
  for (std::size_t t = 0; t < starts.size(); ++t) {
    std::size_t end = t + 1 < starts.size() ? starts[t + 1] - 1 : x.e.size() - 1;
    sum += base(restrict(x, starts[t], end));
  }
  return sum;
}

}  // namespace

Q intervals_n(const Vec& x, unsigned n, const Norm& base) {
  if (x.e.empty()) return 0;
  Q best = 0;
  for_each_start_set(x.e.size(), [&](const std::vector<std::size_t>& starts) {
    if (starts.size() <= n) best = std::max(best, split_sum(x, starts, base));
  });
  return best;
}

Q assoc(const Vec& x, const Member& admissible, const Norm& base) {
  if (x.e.empty()) return 0;
  Q best = base(x);
  for_each_start_set(x.e.size(), [&](const std::vector<std::size_t>& starts) {
    Set mins;
    for (auto s : starts) mins.push_back(x.e[s].first);
    if (admissible(mins)) best = std::max(best, split_sum(x, starts, base));
  });
  return best;
}

Scc21 scc21(const Q& epsilon) {
  Scc21 s;
  s.start = 2;
  while (Q(1, s.start) >= epsilon) ++s.start;
  s.lo = s.start;
  s.hi = s.start * (std::uint32_t(1) << s.start) - 1;
  return s;
}

Q Scc21::coefficient(std::uint32_t m) const {
  if (m < lo || m > hi) return 0;
  std::uint32_t block = start;  // length of the current S_1 block
  std::uint32_t first = start;
  while (m >= first + block) {
    first += block;
    block *= 2;
  }
  return Q(1, start) / block;
}

Q Scc21::max_s1_mass() const {
  // Coefficients never increase along [lo,hi], so the heaviest S_1 set with minimum p is [p, 2p-1].
  Q best = 0;
  for (std::uint32_t p = lo; p <= hi; ++p) {
    Q mass = 0;
    for (std::uint32_t m = p; m < 2 * p && m <= hi; ++m) mass += coefficient(m);
    best = std::max(best, mass);
  }
  return best;
}

std::string format(const Cnf& a) {
  if (a.empty()) return "0";
  std::string s;
  for (auto& [e, c] : a) {
    if (!s.empty()) s += "+";
    if (e == 0) {
      s += std::to_string(c);
      continue;
    }
    s += e == 1 ? "w" : "w^" + std::to_string(e);
    if (c > 1) s += "*" + std::to_string(c);
  }
  return s;
}

std::string format_omega_pow(const Cnf& a) {
  if (a.empty()) return "1";
  if (a.size() == 1 && a[0].first == 0) return a[0].second == 1 ? "w" : "w^" + std::to_string(a[0].second);
  return "w^(" + format(a) + ")";
}

Cnf times(const Cnf& a, std::uint64_t n) {
  if (a.empty() || n == 0) return {};
  Cnf r = a;
  r[0].second *= n;
  return r;
}

Cnf plus(const Cnf& a, const Cnf& b) {
  if (b.empty()) return a;
  Cnf r;
  for (const auto& t : a)
    if (t.first > b[0].first) r.push_back(t);
  auto it = b.begin();
  for (const auto& t : a)
    if (t.first == b[0].first) r.push_back({t.first, t.second + (it++)->second});
  r.insert(r.end(), it, b.end());
  return r;
}

}  // namespace oracle
