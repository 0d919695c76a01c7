#include <doctest.h>

#include <algorithm>

#include "dlab/family_ops.hpp"
#include "oracle.hpp"

using namespace dlab;

namespace {

Family S(unsigned n) { return Family::schreier(Ordinal::natural(n)); }

std::vector<FinSet> brute(std::uint32_t n, const std::function<bool(const oracle::Set&)>& in) {
  std::vector<FinSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m) {
    auto f = oracle::from_mask(m);
    if (in(f)) out.push_back(FinSet(f));
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

}  // namespace

TEST_CASE("membership") {
  CHECK(member(S(1), FinSet{2, 3}));
  CHECK_FALSE(member(S(1), FinSet{1, 2}));
  CHECK(member(S(2), FinSet{2, 3, 4, 5}));
  for (const char* f : {"S(0)", "S(3)", "S(w)", "BR(S(1),S(2))", "EXPL[{1,2}]"}) CHECK(member(parse_family(f), FinSet{}));
}

TEST_CASE("membership matches decomposition search") {
  for (unsigned n = 0; n <= 3; ++n)
    for (std::uint64_t m = 0; m < 1024; ++m) {
      auto f = oracle::from_mask(m);
      CHECK(S(n).contains(f) == oracle::schreier(f, n));
    }
}

TEST_CASE("enumeration") {
  CHECK(enumerate(S(0), 3) == std::vector<FinSet>{{}, {1}, {2}, {3}});
  CHECK(enumerate(S(1), 3) == std::vector<FinSet>{{}, {1}, {2}, {3}, {2, 3}});
  CHECK(enumerate(Family::explicit_sets({FinSet{1}}), 5) == std::vector<FinSet>{{}, {1}});
  CHECK(enumerate(S(2), 9) == brute(9, [](const oracle::Set& f) { return oracle::schreier(f, 2); }));
}

TEST_CASE("maximality") {
  CHECK(is_maximal(S(1), FinSet{2, 3}, 10));
  CHECK_FALSE(is_maximal(S(1), FinSet{3, 4}, 10));
  CHECK(is_maximal(S(0), FinSet{1}, 10));
}

TEST_CASE("derivatives") {
  CHECK(enumerate(derivative(S(1), 12), 12) == brute(12, [](const oracle::Set& f) { return oracle::s1_derived(f, 1); }));
  CHECK(enumerate(derivative(S(0), 12), 12) == std::vector<FinSet>{{}});
  CHECK(enumerate(derivative(Family::explicit_sets({FinSet{}}), 12), 12).empty());
  CHECK(enumerate(iterated_derivative(S(1), 2, 12), 12) ==
        brute(12, [](const oracle::Set& f) { return oracle::s1_derived(f, 2); }));
  CHECK(enumerate(iterated_derivative(S(1), 0, 12), 12) == enumerate(S(1), 12));
  CHECK(enumerate(iterated_derivative(S(0), 1, 12), 12) == std::vector<FinSet>{{}});
  CHECK(enumerate(iterated_derivative(S(0), 2, 12), 12).empty());
}

TEST_CASE("symbolic index") {
  CHECK(index_symbolic(S(1)).value.str() == "w");
  CHECK(index_symbolic(Family::power(S(1), 2)).value.str() == "w^2");
  CHECK(index_symbolic(S(0)).value.str() == "1");
  CHECK(index_symbolic(parse_family("S(w+1)")).value.str() == "w^(w+1)");
}

TEST_CASE("bracket membership") {
  CHECK(bracket_member(S(1), S(1), FinSet{2, 3, 4, 5}));
  CHECK(bracket_member(S(0), S(1), FinSet{2, 3}));
  CHECK_FALSE(bracket_member(S(0), S(1), FinSet{2, 3, 4}));
  CHECK(bracket_member(S(2), S(1), FinSet{}));
  // S_1[S_1] is S_2
  for (std::uint64_t m = 0; m < 1024; ++m) {
    FinSet f(oracle::from_mask(m));
    CHECK(bracket_member(S(1), S(1), f) == S(2).contains(f));
  }
}

TEST_CASE("tail domination") {
  CHECK(tail_domination(S(2), S(1), 12) == 1u);
  CHECK(tail_domination(S(1), S(1), 12) == 1u);
  // inside {1..12}, S_2 sets with minimum at least 7 have at most 6 elements
  auto n = tail_domination(S(1), S(2), 12);
  REQUIRE(n);
  CHECK(*n == 7);
  for (const auto& f : enumerate(S(2), 12))
    if (!f.empty() && f.min() >= 7) CHECK(oracle::s1_closed(f.vec()));
  // smallest threshold by brute force over the truncation
  for (std::uint32_t u = 3; u <= 12; ++u) {
    std::optional<std::uint32_t> want;
    for (std::uint32_t n0 = 1; n0 <= u && !want; ++n0) {
      bool all = true;
      for (std::uint64_t m = 1; m < (std::uint64_t(1) << u); ++m) {
        auto f = oracle::from_mask(m);
        if (f.front() >= n0 && oracle::schreier(f, 2) && !oracle::s1_closed(f)) all = false;
      }
      if (all) want = n0;
    }
    CHECK(tail_domination(S(1), S(2), u) == want);
  }
}

TEST_CASE("regularity") {
  auto r = check_regular(S(3), 10);
  CHECK(r.hereditary);
  CHECK(r.spreading);
  CHECK(check_regular(parse_family("S(w)"), 10).spreading);
  auto bad = check_regular(Family::explicit_unchecked({FinSet{1, 2}}), 5);
  CHECK_FALSE(bad.hereditary);
  REQUIRE_FALSE(bad.hereditary_counterexamples.empty());
  CHECK(bad.hereditary_counterexamples.front().second == FinSet{1});
}
