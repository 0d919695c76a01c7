#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "dlab/dual.hpp"
#include "dlab/equivalence.hpp"
#include "dlab/errors.hpp"
#include "dlab/norm.hpp"
#include "oracle.hpp"

using namespace dlab;

namespace {

FsVector vec(std::vector<FsVector::Entry> e) { return FsVector::from_entries(std::move(e)); }

oracle::Vec to_oracle(const FsVector& x) {
  oracle::Vec v;
  for (const auto& e : x.entries()) v.e.push_back({e.index, e.value});
  return v;
}

const NormSpace T = parse_space("T(S(1),1/2)");
const oracle::Norm oracleT = [](const oracle::Vec& x) { return oracle::tsirelson_s(x, 1, oracle::Q(1, 2)); };
const Family S1 = Family::schreier(Ordinal::natural(1));

}  // namespace

TEST_CASE("descriptors") {
  for (const char* s : {"T(S(1),1/2)", "MT[(S(1),1/2),(S(2),1/4)]", "SCHL", "C0", "L1", "NN(T(S(1),1/2),3)",
                        "ASSOC(T(S(1),1/2),S(1),adm)", "ASSOC(C0,S(2),allow)"})
    CHECK(parse_space(s).str() == s);
  CHECK_THROWS_AS(parse_space("T(S(1),3/2)"), Error);
  CHECK_THROWS_AS(parse_space("X"), ParseError);
  CHECK_FALSE(NormSpace::schlumprecht().exact());
}

TEST_CASE("Tsirelson norm values") {
  CHECK(norm(T, FsVector::basis(1)) == Scalar(1));
  CHECK(norm(T, vec({{2, 1}, {3, 1}})) == Scalar(1));
  CHECK(norm(T, vec({{1, 1}, {2, 1}})) == Scalar(1));
  CHECK(norm(T, FsVector::indicator(FinSet::interval(4, 7), Rational(1, 4))) == Scalar(Rational(1, 2)));
}

TEST_CASE("Tsirelson norm against the fixed point") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 4), idx(1, 14);
  for (int s = 0; s < 40; ++s) {
    std::vector<FsVector::Entry> es;
    std::set<std::uint32_t> used;
    for (int k = 0; k < 8; ++k) used.insert(static_cast<std::uint32_t>(idx(rng)));
    for (auto i : used) {
      Rational v(num(rng), den(rng));
      v.canonicalize();
      if (v != 0) es.push_back({i, v});
    }
    if (es.empty()) continue;
    FsVector x = vec(es);
    CHECK(norm(T, x).rational() == oracleT(to_oracle(x)));
  }
}

TEST_CASE("mixed Tsirelson against the fixed point") {
  NormSpace mt = parse_space("MT[(S(1),1/2),(S(2),1/4)]");
  std::vector<oracle::Level> levels = {{[](const oracle::Set& f) { return oracle::schreier(f, 1); }, oracle::Q(1, 2)},
                                       {[](const oracle::Set& f) { return oracle::schreier(f, 2); }, oracle::Q(1, 4)}};
  for (std::uint64_t m = 1; m < 1024; m += 7) {
    FsVector x = FsVector::indicator(FinSet(oracle::from_mask(m)));
    CHECK(norm(mt, x).rational() == oracle::tsirelson(to_oracle(x), levels));
  }
}

TEST_CASE("Schlumprecht norm") {
  Scalar v = norm(NormSpace::schlumprecht(), vec({{1, 1}, {2, 1}}));
  CHECK_FALSE(v.exact());
  CHECK(v.to_double() == doctest::Approx(2 / std::log2(3.0)).epsilon(1e-12));
}

TEST_CASE("interval norms") {
  FsVector y = vec({{2, 1}, {3, 1}});
  CHECK(norm_n(T, 1, y) == norm(T, y));
  CHECK(norm_n(T, 2, y) == Scalar(2));
  for (unsigned n = 1; n <= 5; ++n)
    for (std::uint32_t k = 1; k <= 6; ++k)
      CHECK(norm_n(NormSpace::c0(), n, FsVector::indicator(FinSet::interval(1, k))) == Scalar(std::min<int>(n, k)));
  for (std::uint64_t m = 1; m < 256; m += 3) {
    FsVector x = FsVector::indicator(FinSet(oracle::from_mask(m)));
    CHECK(norm_n(T, 3, x).rational() == oracle::intervals_n(to_oracle(x), 3, oracleT));
  }
}

TEST_CASE("associated norms") {
  FsVector y = FsVector::indicator(FinSet::interval(4, 7), Rational(1, 4));
  CHECK(assoc_norm(T, S1, y, AssocVariant::admissible) == Scalar(1));
  CHECK(assoc_norm(T, Ordinal::natural(2), FsVector::basis(5), AssocVariant::admissible) == Scalar(1));
  FsVector z = vec({{2, 1}, {3, 1}, {5, 1}});
  CHECK(assoc_norm(T, S1, z, AssocVariant::allowable) >= assoc_norm(T, S1, z, AssocVariant::admissible));
  for (std::uint64_t m = 1; m < 256; ++m) {
    FsVector x = FsVector::indicator(FinSet(oracle::from_mask(m)));
    CHECK(assoc_norm(T, S1, x, AssocVariant::admissible).rational() ==
          oracle::assoc(to_oracle(x), [](const oracle::Set& f) { return oracle::s1_closed(f); }, oracleT));
  }
}

TEST_CASE("norming functionals") {
  for (std::uint64_t m = 1; m < 256; m += 5) {
    FsVector x = FsVector::indicator(FinSet(oracle::from_mask(m)), Rational(2, 3));
    FsFunctional f = norming_functional(T, x);
    CHECK(Scalar(f(x)) == norm(T, x));
    CHECK(dual_upper(T, f) <= Scalar(1));
  }
}

TEST_CASE("dual norms") {
  FsFunctional e12(vec({{1, 1}, {2, 1}}));
  Bounds c = dual_norm(NormSpace::c0(), e12, Interval{1, 4});
  CHECK(c.exact());
  CHECK(c.lower == Scalar(2));
  Bounds l = dual_norm(NormSpace::l1(), e12);
  CHECK(l.exact());
  CHECK(l.lower == Scalar(1));
  Bounds t = dual_norm(T, FsFunctional(vec({{2, 1}, {3, 1}})), Interval{1, 4});
  CHECK(t.lower >= Scalar(2));
  CHECK(t.exact());

  FsFunctional quarter(FsVector::indicator(FinSet::interval(1, 4), Rational(1, 4)));
  Bounds n2 = dual_intervals_norm(NormSpace::c0(), quarter, 2, Interval{1, 4});
  CHECK(n2.exact());
  CHECK(n2.lower == Scalar(1));
  FsFunctional em = FsFunctional::coordinate(6);
  CHECK(dual_intervals_norm(T, em, 3).lower == dual_norm(T, em).lower);

  Bounds a = dual_assoc_norm(NormSpace::c0(), FsFunctional(FsVector::indicator(FinSet::interval(1, 4))), S1);
  CHECK(a.lower <= a.upper);
}

TEST_CASE("primal values through duals") {
  Bounds b = primal_from_dual(NormSpace::c0(), FsVector::indicator(FinSet::interval(1, 4)), S1);
  CHECK(b.exact());
  CHECK(b.lower == Scalar(1));
  Bounds e = primal_from_dual(NormSpace::c0(), FsVector::basis(3), Family::schreier(Ordinal::natural(2)));
  CHECK(e.lower == Scalar(1));
  Bounds l = primal_from_dual(NormSpace::l1(), vec({{2, 1}, {3, 1}}), S1);
  CHECK(l.upper <= Scalar(2));
  CHECK(l.lower >= Scalar(1));
}

TEST_CASE("equivalence values") {
  std::vector<FsVector> xs = {FsVector::basis(4), FsVector::basis(5), FsVector::basis(6), FsVector::basis(7)};
  EquivalenceBounds e = l1_lower_value(T, xs);
  CHECK(e.exact());
  CHECK(e.lower == Scalar(Rational(1, 2)));
  CHECK(c0_upper_value(NormSpace::c0(), xs) == Scalar(1));
  CHECK_THROWS_AS(require_block_sequence({FsVector::basis(3), FsVector::basis(2)}), Error);
}

TEST_CASE("limits") {
  NormLimits small;
  small.max_support = 4;
  CHECK_THROWS_AS(norm(T, FsVector::indicator(FinSet::interval(1, 5)), small), ResourceError);
}
