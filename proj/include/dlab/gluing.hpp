#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dlab/block_tree.hpp"
#include "dlab/scc.hpp"

namespace dlab {

enum class Verdict { verified, refuted, inconclusive, precondition_failed };
std::string to_string(Verdict v);

struct GluingReport {
  int lemma = 0;
  Verdict status = Verdict::verified;
  FsVector vector;
  std::optional<FsFunctional> functional;
  // Named quantities in report order; exact values have lower == upper.
  std::vector<std::pair<std::string, Bounds>> values;
  std::vector<std::string> checks;  // each inequality with its outcome
  nlohmann::json parameters = nlohmann::json::object();
  std::optional<Scc> scc;
  std::optional<TreeCertificate> certificate;
  std::string detail;

  const Bounds& value(const std::string& name) const;
  nlohmann::json to_json() const;
};

struct GluingOptions {
  // Certify the block hypotheses first; without this a failed inequality reports refuted.
  bool certify = true;
  EquivalenceOptions equivalence{};
  SccLimits scc{};
};

// x = (1/n^2) sum x_i over n^2 blocks; 1/2 <= ||x|| <= ||x||_n <= 2.
GluingReport gluing_lemma1(const NormSpace& space, unsigned n, const std::vector<FsVector>& blocks, const GluingOptions& options = {});

// x = sum a_m x_i over an SCC F fitted to a branch; 1/K <= ||x|| <= |x|_eta <= 2 C1.
GluingReport gluing_lemma2(const NormSpace& space, const Ordinal& eta, const Ordinal& xi, const BlockTree& tree, const Rational& C1,
                           const Rational& C2, const GluingOptions& options = {});

// c0 side: x = sum x_i, phi = (1/n^2) sum phi_i; 1/2 <= ||x||_n <= ||x|| <= 2, with ||.||_n dual to the interval norm.
// K is the c0-equivalence constant required of the blocks.
GluingReport gluing_lemma3(const NormSpace& space, unsigned n, const std::vector<FsVector>& blocks,
                           const std::vector<FsFunctional>& functionals, const Rational& K = 2, const GluingOptions& options = {});

// c0 side: x = sum x_i, phi = sum a_m phi_i over an SCC F; 1/(2 C1) <= |x|_eta <= ||x|| <= K.
// Without functionals, phi_i is the norming functional of x_i restricted to its support.
GluingReport gluing_lemma4(const NormSpace& space, const Ordinal& eta, const Ordinal& xi, const BlockTree& tree, const Rational& C1,
                           const Rational& C2, const std::optional<std::vector<FsFunctional>>& functionals = {},
                           const GluingOptions& options = {});

// Tree with the single branch (e_m) over the given set, closed under prefixes.
BlockTree basis_block_tree(const std::vector<FinSet>& branches, EquivalenceMode mode, const Rational& K);

}  // namespace dlab
