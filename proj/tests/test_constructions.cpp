#include <doctest.h>

#include "dlab/asymptotic.hpp"
#include "dlab/distortion.hpp"
#include "dlab/errors.hpp"
#include "dlab/gluing.hpp"
#include "dlab/scc.hpp"
#include "oracle.hpp"

using namespace dlab;

namespace {

const NormSpace T = parse_space("T(S(1),1/2)");

std::vector<FsVector> basis_run(std::uint32_t a, std::uint32_t b) {
  std::vector<FsVector> v;
  for (std::uint32_t i = a; i <= b; ++i) v.push_back(FsVector::basis(i));
  return v;
}

}  // namespace

TEST_CASE("special convex combinations") {
  Scc a = build_scc(Ordinal::natural(1), Ordinal::natural(0), Rational(1, 4), 5u);
  CHECK(a.support == FinSet::interval(5, 9));
  for (std::uint32_t m = 5; m <= 9; ++m) CHECK(a.coefficient(m) == Rational(1, 5));
  CHECK(a.max_mass == Rational(1, 5));

  try {
    build_scc(Ordinal::natural(1), Ordinal::natural(0), Rational(1), 1u);
    FAIL("expected NeedsLargerStart");
  } catch (const NeedsLargerStart& e) {
    CHECK(e.minimal_start() == 2);
  }

  for (Rational eps : {Rational(1, 4), Rational(1, 2), Rational(1, 3)}) {
    Scc s = build_scc(Ordinal::natural(2), Ordinal::natural(1), eps);
    oracle::Scc21 o = oracle::scc21(eps);
    CHECK(s.start == o.start);
    CHECK(s.support == FinSet::interval(o.lo, o.hi));
    for (std::uint32_t m = o.lo; m <= o.hi; ++m) CHECK(s.coefficient(m) == o.coefficient(m));
    CHECK(s.max_mass == o.max_s1_mass());
    CHECK(s.max_mass < eps);
  }
}

TEST_CASE("repeated averages sum to one") {
  for (const char* xi : {"1", "2", "3", "w"}) {
    Rational total = 0;
    for (const auto& [m, w] : repeated_averages(parse_ordinal(xi), 2)) total += w;
    CHECK(total == 1);
  }
}

TEST_CASE("lemma 1") {
  GluingReport r = gluing_lemma1(T, 2, basis_run(4, 7));
  CHECK(r.status == Verdict::verified);
  CHECK(r.value("norm").lower == Scalar(Rational(1, 2)));
  CHECK(r.value("norm_n").upper <= Scalar(1));
  CHECK(gluing_lemma1(NormSpace::l1(), 2, basis_run(1, 4)).status == Verdict::verified);
  CHECK(gluing_lemma1(T, 3, basis_run(9, 17)).status == Verdict::verified);
  CHECK_THROWS_AS(gluing_lemma1(T, 2, basis_run(4, 6)), Error);
}

TEST_CASE("lemma 2") {
  BlockTree l1tree = basis_block_tree({FinSet::interval(3, 23)}, EquivalenceMode::l1, Rational(1));
  GluingReport ell = gluing_lemma2(NormSpace::l1(), Ordinal::natural(1), Ordinal::natural(2), l1tree, Rational(1), Rational(2));
  CHECK(ell.status == Verdict::verified);
  CHECK(ell.value("norm").lower == Scalar(1));
  CHECK(ell.value("assoc_norm").lower == Scalar(1));

  BlockTree tree = basis_block_tree({FinSet::interval(3, 23)}, EquivalenceMode::l1, Rational(2));
  GluingReport r = gluing_lemma2(T, Ordinal::natural(1), Ordinal::natural(2), tree, Rational(2), Rational(2));
  CHECK(r.status == Verdict::precondition_failed);
  REQUIRE(r.certificate);
  CHECK(r.certificate->status == CertStatus::violated);
  CHECK(r.value("norm").lower == Scalar(Rational(5, 18)));
  tree.K = 4;
  CHECK(gluing_lemma2(T, Ordinal::natural(1), Ordinal::natural(2), tree, Rational(2), Rational(2)).status == Verdict::verified);
}

TEST_CASE("lemma 3") {
  std::vector<FsFunctional> fs;
  for (std::uint32_t i = 1; i <= 4; ++i) fs.push_back(FsFunctional::coordinate(i));
  GluingReport r = gluing_lemma3(NormSpace::c0(), 2, basis_run(1, 4), fs);
  CHECK(r.status == Verdict::verified);
  CHECK(r.value("norm").lower == Scalar(1));
  CHECK(gluing_lemma3(NormSpace::c0(), 1, basis_run(1, 1), {FsFunctional::coordinate(1)}).status == Verdict::verified);

  std::vector<FsFunctional> gs;
  for (std::uint32_t i = 4; i <= 7; ++i) gs.push_back(FsFunctional::coordinate(i));
  CHECK(gluing_lemma3(T, 2, basis_run(4, 7), gs, Rational(3, 2)).status == Verdict::precondition_failed);
  std::vector<FsFunctional> wrong = fs;
  wrong[1] = FsFunctional::coordinate(3);
  CHECK(gluing_lemma3(NormSpace::c0(), 2, basis_run(1, 4), wrong).status == Verdict::precondition_failed);
}

TEST_CASE("lemma 4") {
  BlockTree tree = basis_block_tree({FinSet::interval(3, 23)}, EquivalenceMode::c0, Rational(1));
  GluingReport r = gluing_lemma4(NormSpace::c0(), Ordinal::natural(1), Ordinal::natural(2), tree, Rational(1), Rational(2));
  CHECK(r.status == Verdict::verified);
  BlockTree t0 = basis_block_tree({FinSet::interval(2, 3)}, EquivalenceMode::c0, Rational(1));
  CHECK(gluing_lemma4(NormSpace::c0(), Ordinal::natural(0), Ordinal::natural(1), t0, Rational(1), Rational(1)).status ==
        Verdict::verified);
  GluingReport f = gluing_lemma4(NormSpace::c0().with_mode(Mode::floating), Ordinal::natural(1), Ordinal::natural(2), tree,
                                 Rational(1), Rational(2));
  CHECK(f.status == Verdict::inconclusive);
}

TEST_CASE("spreading models") {
  auto b = basis_run(1, 30);
  CHECK(check_spreading_model(T, b, Ordinal::natural(1), Rational(2), 12).outcome == CheckOutcome::pass);
  CHECK(check_spreading_model(NormSpace::c0(), b, Ordinal::natural(0), Rational(1), 12).outcome == CheckOutcome::pass);
  SpreadingResult c = check_spreading_model(NormSpace::c0(), b, Ordinal::natural(1), Rational(10), 21);
  CHECK(c.outcome == CheckOutcome::fail);
  REQUIRE(c.witness_set);
  CHECK(*c.witness_set == FinSet::interval(11, 21));
  CHECK(c.witness_coefficients == std::vector<Rational>(11, Rational(1)));
}

TEST_CASE("asymptoticity") {
  AsymptoticityResult t = measure_asymptoticity(T, Ordinal::natural(1), 10, AssocVariant::admissible);
  CHECK(t.exact());
  CHECK(t.lower == Scalar(2));
  AsymptoticityResult l = measure_asymptoticity(NormSpace::l1(), Ordinal::natural(2), 8, AssocVariant::admissible);
  CHECK(l.lower == Scalar(1));
  CHECK(l.upper == Scalar(1));
  AsymptoticityResult c = measure_asymptoticity(NormSpace::c0(), Ordinal::natural(1), 10, AssocVariant::admissible);
  AsymptoticityResult c8 = measure_asymptoticity(NormSpace::c0(), Ordinal::natural(1), 8, AssocVariant::admissible);
  CHECK(c.lower > c8.lower);
}

TEST_CASE("distortion scan") {
  NormSpace a = NormSpace::assoc(T, Family::schreier(Ordinal::natural(1)), AssocVariant::admissible);
  DistortionReport r = distortion_scan(T, a, "e8;avg(S(1),4,8,16)");
  CHECK(r.lambda == Scalar(2));
  CHECK(r.entries[r.argmin].id == "e8");
  CHECK(r.entries[r.argmax].normalized == FsVector::indicator(FinSet::interval(4, 7), Rational(1, 2)));
  CHECK(r.to_csv().rfind("vector_id,base_norm,derived_norm,ratio\n", 0) == 0);

  NormSpace la = NormSpace::assoc(NormSpace::l1(), Family::schreier(Ordinal::natural(1)), AssocVariant::admissible);
  CHECK(distortion_scan(NormSpace::l1(), la, "basis(1,4);int(2,9);avg(S(2),3)").lambda == Scalar(1));
  CHECK_THROWS_AS(distortion_scan(T, a, ""), DomainError);
  CHECK_THROWS_AS(distortion_scan(T, a, "q7"), ParseError);

  // subspace-relative: u_i = e_{2i} + e_{2i+1}
  std::vector<FsVector> u;
  for (std::uint32_t i = 2; i <= 10; ++i) u.push_back(FsVector::from_entries({{2 * i, 1}, {2 * i + 1, 1}}));
  DistortionReport s = distortion_scan(T, a, "e1;int(2,3)", u);
  CHECK(s.block_basis);
  CHECK(s.entries[0].id == "u:e1");
  CHECK(s.entries[0].normalized.support() == FinSet{4, 5});
}

TEST_CASE("distortion scan is deterministic across thread counts") {
  NormSpace a = NormSpace::assoc(T, Family::schreier(Ordinal::natural(1)), AssocVariant::admissible);
  DistortionOptions one, many;
  one.threads = 1;
  many.threads = 8;
  auto x = distortion_scan(T, a, "basis(1,6);avg(S(1),2,3,4,5);int(3,9)", std::nullopt, one).to_json().dump();
  auto y = distortion_scan(T, a, "basis(1,6);avg(S(1),2,3,4,5);int(3,9)", std::nullopt, many).to_json().dump();
  CHECK(x == y);
}
