#pragma once

// Brute-force reference implementations, kept free of the library's algorithms.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Set = std::vector<std::uint32_t>;
using Member = std::function<bool(const Set&)>;

// Subsets of {1..n} from a bitmask.
Set from_mask(std::uint64_t mask);

bool s1_closed(const Set& f);
// Decomposition search: f in S_n iff it splits into consecutive S_(n-1) runs, no more runs than min f.
bool schreier(const Set& f, unsigned n);
// k-th derivative of S_1: |G| + k <= min G, or G empty.
bool s1_derived(const Set& f, unsigned k);

struct Vec {
  std::vector<std::pair<std::uint32_t, Q>> e;  // increasing indices, nonzero values
};

struct Level {
  Member admissible;
  Q theta;
};

// Implicit norm by iterating x -> max(sup|x_i|, max_l theta_l sup sum |E_i x|) to its fixed point.
Q tsirelson(const Vec& x, const std::vector<Level>& levels);
Q tsirelson_s(const Vec& x, unsigned n, const Q& theta);
Q c0(const Vec& x);
Q l1(const Vec& x);

using Norm = std::function<Q(const Vec&)>;
Vec restrict(const Vec& x, std::size_t lo, std::size_t hi);
// sup over at most n successive intervals of the summed base norms.
Q intervals_n(const Vec& x, unsigned n, const Norm& base);
// sup over interval decompositions whose minima form an admissible set.
Q assoc(const Vec& x, const Member& admissible, const Norm& base);

// Repeated averages for xi = 2, eta = 1.
struct Scc21 {
  std::uint32_t start = 0, lo = 0, hi = 0;
  Q coefficient(std::uint32_t m) const;
  // Max of sum a_m over S_1 subsets of [lo,hi].
  Q max_s1_mass() const;
};
Scc21 scc21(const Q& epsilon);

// Cantor normal form below w^w: (exponent, coefficient) pairs, decreasing exponents.
using Cnf = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
std::string format(const Cnf& a);
std::string format_omega_pow(const Cnf& a);
Cnf times(const Cnf& a, std::uint64_t n);
Cnf plus(const Cnf& a, const Cnf& b);

}  // namespace oracle
