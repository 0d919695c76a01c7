#include <doctest.h>

#include "dlab/errors.hpp"
#include "dlab/ordinal.hpp"
#include "dlab/symbolic.hpp"
#include "oracle.hpp"

using namespace dlab;

TEST_CASE("parse and print canonical forms") {
  CHECK(parse_ordinal("0").is_zero());
  CHECK(parse_ordinal("w*2+3").str() == "w*2+3");
  CHECK(parse_ordinal("w^2+w+1").str() == "w^2+w+1");
  CHECK(parse_ordinal("w^2+w+1") == Ordinal::omega_power(2) + Ordinal::omega_power(1) + Ordinal::natural(1));
  CHECK(Ordinal::natural(3) + Ordinal::omega_power(1) == Ordinal::omega_power(1));
  CHECK_THROWS_AS(parse_ordinal("w^"), ParseError);
  CHECK_THROWS_AS(parse_ordinal("w^w"), Error);
}

TEST_CASE("comparison") {
  CHECK(parse_ordinal("w") < parse_ordinal("w+1"));
  CHECK(parse_ordinal("w*2") > parse_ordinal("w+5"));
  CHECK(parse_ordinal("w^2") == parse_ordinal("w^2"));
}

TEST_CASE("successor decomposition") {
  auto d = successor_decompose(parse_ordinal("w+1"));
  CHECK(d.kind == OrdinalKind::successor);
  CHECK(d.predecessor == parse_ordinal("w"));
  CHECK(successor_decompose(parse_ordinal("w^2")).kind == OrdinalKind::limit);
  CHECK(successor_decompose(Ordinal()).kind == OrdinalKind::zero);
}

TEST_CASE("fundamental sequences") {
  CHECK(fundamental_sequence(parse_ordinal("w"), 3) == Ordinal::natural(3));
  CHECK(fundamental_sequence(parse_ordinal("w*2"), 3) == parse_ordinal("w+3"));
  CHECK(fundamental_sequence(parse_ordinal("w^2"), 3) == parse_ordinal("w*3"));
  CHECK(fundamental_sequence(parse_ordinal("w^3*2+w^2"), 4) == parse_ordinal("w^3*2+w*4"));
  CHECK_THROWS(fundamental_sequence(parse_ordinal("w+1"), 2));
}

TEST_CASE("symbolic powers of omega") {
  CHECK(symbolic_omega_pow(Ordinal()).str() == "1");
  CHECK(symbolic_omega_pow(parse_ordinal("w^2")) == symbolic_omega_pow(parse_ordinal("w^2")));
  auto ww = symbolic_omega_pow(parse_ordinal("w"));
  CHECK(symbolic_product(ww, ww) == symbolic_omega_pow(parse_ordinal("w*2")));
  CHECK((ww * ww).str() == oracle::format_omega_pow(oracle::plus({{1, 1}}, {{1, 1}})));
  // exponent sums against the independent normalizer
  const std::vector<oracle::Cnf> xs = {{}, {{0, 2}}, {{1, 1}}, {{1, 1}, {0, 3}}, {{2, 1}}, {{2, 2}, {1, 1}}};
  for (const auto& a : xs)
    for (const auto& b : xs) {
      auto pa = symbolic_omega_pow(parse_ordinal(oracle::format(a)));
      auto pb = symbolic_omega_pow(parse_ordinal(oracle::format(b)));
      CHECK((pa * pb).str() == oracle::format_omega_pow(oracle::plus(a, b)));
    }
}
