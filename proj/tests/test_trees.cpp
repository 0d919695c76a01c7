#include <doctest.h>

#include "dlab/block_tree.hpp"
#include "dlab/family_ops.hpp"
#include "dlab/gluing.hpp"
#include "dlab/tree.hpp"

using namespace dlab;

namespace {

Family S(unsigned n) { return Family::schreier(Ordinal::natural(n)); }

}  // namespace

TEST_CASE("tree derivative and order") {
  CHECK(derivative(FiniteTree::chain(3)) == FiniteTree::chain(2));
  CHECK(derivative(FiniteTree()).empty());
  CHECK(derivative(FiniteTree::full(2, 2)) == FiniteTree::full(2, 1));
  CHECK(order(FiniteTree()) == 0);
  CHECK(order(FiniteTree::chain(5)) == 5);
  CHECK(order(family_as_tree(S(1), 8)) < order(family_as_tree(S(2), 8)));
  CHECK_THROWS(FiniteTree::from_nodes({{1, 2}}));
}

TEST_CASE("families as trees") {
  FiniteTree t0 = family_as_tree(S(0), 4);
  CHECK(t0.size() == 4);
  CHECK(order(t0) == 1);
  FiniteTree t1 = family_as_tree(S(1), 2);
  CHECK(t1 == FiniteTree::from_nodes({{1}, {2}}));
  CHECK(order(t1) == 1);
  CHECK(family_as_tree(Family::explicit_sets({FinSet{}}), 4).empty());
}

TEST_CASE("block tree certification") {
  NormSpace t = parse_space("T(S(1),1/2)");
  BlockTree good = basis_block_tree({FinSet{4, 5, 6, 7}, FinSet{5, 6, 7, 8, 9}}, EquivalenceMode::l1, Rational(2));
  CHECK(certify_block_tree(good, t).status == CertStatus::certified);
  BlockTree single = basis_block_tree({FinSet{3}}, EquivalenceMode::l1, Rational(1));
  CHECK(certify_block_tree(single, NormSpace::c0()).status == CertStatus::certified);
  BlockTree c0pair = basis_block_tree({FinSet{1, 2}}, EquivalenceMode::l1, Rational(3, 2));
  TreeCertificate c = certify_block_tree(c0pair, NormSpace::c0());
  CHECK(c.status == CertStatus::violated);
  REQUIRE(c.witness);
  CHECK(c.witness->witness == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(c.witness->upper == Scalar(Rational(1, 2)));
}

TEST_CASE("block tree JSON round trip") {
  BlockTree b = basis_block_tree({FinSet{2, 3}}, EquivalenceMode::c0, Rational(3, 2));
  BlockTree r = BlockTree::from_json(b.to_json());
  CHECK(r.tree == b.tree);
  CHECK(r.vectors == b.vectors);
  CHECK(r.K == b.K);
  CHECK(r.mode == EquivalenceMode::c0);
}

TEST_CASE("tree to family") {
  BlockTree one;
  one.vectors = {FsVector::from_entries({{2, 1}, {3, 1}})};
  one.tree = FiniteTree::from_nodes({{0}});
  CHECK(enumerate(tree_to_family(one, 5), 5) == std::vector<FinSet>{{}, {3}, {4}, {5}});
  CHECK(enumerate(tree_to_family(BlockTree{}, 5), 5) == std::vector<FinSet>{{}});

  BlockTree two;
  two.vectors = {FsVector::basis(2), FsVector::basis(4)};
  two.tree = FiniteTree::from_nodes({{0}, {0, 1}});
  auto fam = tree_to_family(two, 6);
  CHECK(fam.contains(FinSet{2, 4}));
  CHECK(fam.contains(FinSet{3, 5}));
  CHECK_FALSE(fam.contains(FinSet{2, 3}));
  // brute tuple scan: m1 >= 2, m2 >= 4, m1 < m2
  for (std::uint32_t a = 1; a <= 6; ++a)
    for (std::uint32_t b = a + 1; b <= 6; ++b) CHECK(fam.contains(FinSet{a, b}) == (a >= 2 && b >= 4));
}

TEST_CASE("index lower bound search") {
  NormSpace t = parse_space("T(S(1),1/2)");
  SearchResult ok = index_lower_bound_search(t, S(1), Rational(2), 10);
  CHECK(ok.tree.has_value());
  CHECK(ok.maximal_sets == 55);
  SearchResult bad = index_lower_bound_search(NormSpace::c0(), S(1), Rational(3, 2), 8);
  CHECK_FALSE(bad.tree.has_value());
  SearchResult triv = index_lower_bound_search(t, Family::explicit_sets({FinSet{}}), Rational(2), 8);
  CHECK(triv.tree.has_value());
  CHECK(triv.tree->tree.empty());
}
