#include "dlab/gluing.hpp"

#include <map>

namespace dlab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified:
      return "verified";
    case Verdict::refuted:
      return "refuted";
    case Verdict::inconclusive:
      return "inconclusive";
    case Verdict::precondition_failed:
      return "precondition_failed";
  }
  return "?";
}

const Bounds& GluingReport::value(const std::string& name) const {
  for (const auto& [n, b] : values)
    if (n == name) return b;
  throw DomainError("report has no value " + name);
}

nlohmann::json GluingReport::to_json() const {
  nlohmann::json vals = nlohmann::json::array();
  for (const auto& [n, b] : values) {
    auto j = b.to_json();
    j["name"] = n;
    vals.push_back(j);
  }
  nlohmann::json j{{"lemma", lemma},
                   {"status", to_string(status)},
                   {"parameters", parameters},
                   {"values", vals},
                   {"checks", checks},
                   {"vector", vector.to_json()}};
  if (functional) j["functional"] = functional->coords().to_json();
  if (scc) j["scc"] = scc->to_json();
  if (certificate) j["certificate"] = certificate->to_json();
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

BlockTree basis_block_tree(const std::vector<FinSet>& branches, EquivalenceMode mode, const Rational& K) {
  BlockTree t;
  t.mode = mode;
  t.K = K;
  std::map<std::uint32_t, Label> table;
  std::vector<Sequence> seqs;
  for (const auto& f : branches) {
    Sequence s;
    for (auto m : f.elements()) {
      auto [it, fresh] = table.emplace(m, static_cast<Label>(t.vectors.size()));
      if (fresh) t.vectors.push_back(FsVector::basis(m));
      s.push_back(it->second);
    }
    if (!s.empty()) seqs.push_back(s);
  }
  t.tree = FiniteTree::from_branches(seqs);
  return t;
}

namespace {

Mode mode_of(const NormSpace& s) { return s.exact() ? Mode::exact : Mode::floating; }

Bounds point(const Scalar& v) { return {v, v}; }

// Three-valued comparison of certified bounds: 1 holds, 0 unknown, -1 fails.
int bound_le(const Scalar& a_hi, const Scalar& a_lo, const Scalar& b_lo, const Scalar& b_hi) {
  const bool exact = a_hi.exact() && b_lo.exact();
  const double tol = exact ? 0.0 : kFloatTolerance;
  if (certainly_le(a_hi, b_lo, tol)) return 1;
  if (!certainly_le(a_lo, b_hi, tol)) return -1;
  return 0;
}

struct Tally {
  int worst = 1;
  void add(GluingReport& r, const std::string& text, int outcome) {
    r.checks.push_back(text + (outcome > 0 ? ": holds" : outcome < 0 ? ": fails" : ": undecided"));
    worst = std::min(worst, outcome);
  }
  Verdict verdict() const { return worst > 0 ? Verdict::verified : worst < 0 ? Verdict::refuted : Verdict::inconclusive; }
};

void settle(GluingReport& r, const Tally& t) {
  if (r.status == Verdict::precondition_failed) return;
  r.status = t.verdict();
}

Verdict from_certificate(const TreeCertificate& c) {
  switch (c.status) {
    case CertStatus::certified:
      return Verdict::verified;
    case CertStatus::inconclusive:
      return Verdict::inconclusive;
    default:
      return Verdict::precondition_failed;
  }
}

BlockTree single_branch(const std::vector<FsVector>& blocks, EquivalenceMode mode, const Rational& K) {
  BlockTree t;
  t.mode = mode;
  t.K = K;
  t.vectors = blocks;
  Sequence s;
  for (std::size_t i = 0; i < blocks.size(); ++i) s.push_back(static_cast<Label>(i));
  if (!s.empty()) t.tree = FiniteTree::from_branches({s});
  return t;
}

// Returns false when the hypothesis is not met; the status then says why.
bool certify_into(GluingReport& r, const BlockTree& t, const NormSpace& space, const GluingOptions& o) {
  if (!o.certify) return true;
  r.certificate = certify_block_tree(t, space, o.equivalence);
  Verdict v = from_certificate(*r.certificate);
  if (v == Verdict::verified) return true;
  r.status = v;
  r.detail = "block hypothesis not certified: " + to_string(r.certificate->status);
  if (!r.certificate->detail.empty()) r.detail += " (" + r.certificate->detail + ")";
  return false;
}

struct Fit {
  Scc scc;
  std::vector<FsVector> blocks;
  Sequence branch;
};

// First maximal branch, in tree order, carrying an SCC whose i-th element dominates max supp x_i.
std::optional<Fit> fit_scc(const BlockTree& tree, const Ordinal& xi, const Ordinal& eta, const Rational& epsilon,
                           const SccLimits& limits) {
  Scc least = build_scc(xi, eta, epsilon, {}, limits);
  std::map<std::uint32_t, std::optional<Scc>> by_start;
  auto at = [&](std::uint32_t s) -> const std::optional<Scc>& {
    auto it = by_start.find(s);
    if (it != by_start.end()) return it->second;
    std::optional<Scc> v;
    try {
      v = build_scc(xi, eta, epsilon, s, limits);
    } catch (const NeedsLargerStart&) {
    } catch (const ResourceError&) {
    }
    return by_start.emplace(s, std::move(v)).first->second;
  };
  for (const auto& node : tree.tree.maximal_nodes()) {
    auto xs = tree.blocks(node);
    for (std::uint32_t s = least.start; s <= limits.max_start; ++s) {
      const auto& scc = at(s);
      if (!scc) continue;
      const auto& f = scc->support.elements();
      if (f.size() > xs.size()) continue;
      bool ok = true;
      for (std::size_t i = 0; i < f.size() && ok; ++i) ok = xs[i].max_index() <= f[i];
      if (!ok) continue;
      std::vector<FsVector> used(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(f.size()));
      Sequence b(node.begin(), node.begin() + static_cast<std::ptrdiff_t>(f.size()));
      return Fit{*scc, used, b};
    }
  }
  return std::nullopt;
}

// Biorthogonal and normalized: supp phi_i inside supp x_i, phi_i(x_i) = 1, dual norm <= 1.
// Returns 1 when certified, 0 when only the dual norm bound is undecided, -1 when malformed.
int check_functionals(const NormSpace& space, const std::vector<FsVector>& xs, const std::vector<FsFunctional>& fs,
                      const GluingOptions& o, std::string& why) {
  if (fs.size() != xs.size()) {
    why = "functional count differs from block count";
    return -1;
  }
  int worst = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (const auto& e : fs[i].coords().entries())
      if (xs[i].at(e.index) == 0) {
        why = "functional " + std::to_string(i + 1) + " leaves the support of its block";
        return -1;
      }
    if (fs[i](xs[i]) != 1) {
      why = "functional " + std::to_string(i + 1) + " does not take the value 1 on its block";
      return -1;
    }
    Bounds b = dual_norm(space, fs[i], {}, o.equivalence.dual);
    int c = bound_le(b.upper, b.lower, Scalar(1), Scalar(1));
    if (c < 0) {
      why = "functional " + std::to_string(i + 1) + " has dual norm above 1";
      return -1;
    }
    worst = std::min(worst, c);
  }
  if (worst == 0) why = "dual norm of a functional not certified <= 1";
  return worst;
}

}  // namespace

GluingReport gluing_lemma1(const NormSpace& space, unsigned n, const std::vector<FsVector>& blocks, const GluingOptions& options) {
  if (n == 0) throw DomainError("n must be >= 1");
  if (blocks.size() != static_cast<std::size_t>(n) * n) throw DomainError("lemma 1 needs n^2 blocks");
  require_block_sequence(blocks);
  const Mode mode = mode_of(space);
  GluingReport r;
  r.lemma = 1;
  r.parameters = {{"space", space.str()}, {"n", n}, {"blocks", blocks.size()}};
  if (!certify_into(r, single_branch(blocks, EquivalenceMode::l1, Rational(2)), space, options)) return r;

  FsVector x;
  for (const auto& b : blocks) x = x + b;
  x = x.scaled(Rational(1, static_cast<long>(n) * n));
  r.vector = x;
  Scalar nx = norm(space, x, options.equivalence.dual.limits);
  Scalar nn = norm_n(space, n, x, options.equivalence.dual.limits);
  r.values = {{"norm", point(nx)}, {"norm_n", point(nn)}};
  const Scalar half = Scalar::in_mode(Rational(1, 2), mode), two = Scalar::in_mode(2, mode);
  Tally t;
  t.add(r, "1/2 <= ||x||", bound_le(half, half, nx, nx));
  t.add(r, "||x|| <= ||x||_n", bound_le(nx, nx, nn, nn));
  t.add(r, "||x||_n <= 2", bound_le(nn, nn, two, two));
  settle(r, t);
  return r;
}

GluingReport gluing_lemma2(const NormSpace& space, const Ordinal& eta, const Ordinal& xi, const BlockTree& tree, const Rational& C1,
                           const Rational& C2, const GluingOptions& options) {
  if (!(eta < xi)) throw DomainError("eta must be smaller than xi");
  if (C1 < 1 || C2 < 1) throw DomainError("constants must be >= 1");
  if (tree.mode != EquivalenceMode::l1) throw DomainError("lemma 2 needs an l1 block tree");
  const Mode mode = mode_of(space);
  GluingReport r;
  r.lemma = 2;
  r.parameters = {{"space", space.str()}, {"eta", eta.str()},       {"xi", xi.str()},
                  {"K", to_string(tree.K)}, {"C1", to_string(C1)}, {"C2", to_string(C2)}};
  const bool hypothesis = certify_into(r, tree, space, options);

  auto fit = fit_scc(tree, xi, eta, 1 / C2, options.scc);
  if (!fit) {
    r.status = Verdict::precondition_failed;
    r.detail = "no branch carries a special convex combination";
    return r;
  }
  r.scc = fit->scc;
  r.parameters["branch"] = fit->branch;
  FsVector x;
  for (std::size_t i = 0; i < fit->blocks.size(); ++i) x = x + fit->blocks[i].scaled(fit->scc.coefficients[i]);
  r.vector = x;
  const auto& lim = options.equivalence.dual.limits;
  Scalar nx = norm(space, x, lim);
  Scalar ax = assoc_norm(space, eta, x, AssocVariant::admissible, lim);
  r.values = {{"norm", point(nx)}, {"assoc_norm", point(ax)}};
  const Scalar invK = Scalar::in_mode(1 / tree.K, mode), cap = Scalar::in_mode(2 * C1, mode);
  Tally t;
  t.add(r, "1/K <= ||x||", bound_le(invK, invK, nx, nx));
  t.add(r, "||x|| <= |x|_eta", bound_le(nx, nx, ax, ax));
  t.add(r, "|x|_eta <= 2 C1", bound_le(ax, ax, cap, cap));
  if (hypothesis) settle(r, t);
  return r;
}

GluingReport gluing_lemma3(const NormSpace& space, unsigned n, const std::vector<FsVector>& blocks,
                           const std::vector<FsFunctional>& functionals, const Rational& K, const GluingOptions& options) {
  if (n == 0) throw DomainError("n must be >= 1");
  if (blocks.size() != static_cast<std::size_t>(n) * n) throw DomainError("lemma 3 needs n^2 blocks");
  require_block_sequence(blocks);
  const Mode mode = mode_of(space);
  GluingReport r;
  r.lemma = 3;
  r.parameters = {{"space", space.str()}, {"n", n}, {"blocks", blocks.size()}, {"K", to_string(K)}};
  if (!certify_into(r, single_branch(blocks, EquivalenceMode::c0, K), space, options)) return r;
  std::string why;
  int fc = check_functionals(space, blocks, functionals, options, why);
  if (fc < 0) {
    r.status = Verdict::precondition_failed;
    r.detail = why;
    return r;
  }

  FsVector x;
  FsFunctional phi;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    x = x + blocks[i];
    phi = phi + functionals[i].scaled(Rational(1, static_cast<long>(n) * n));
  }
  r.vector = x;
  r.functional = phi;
  const auto& lim = options.equivalence.dual.limits;
  Scalar nx = norm(space, x, lim);
  Bounds dn = dual_intervals_norm(space, phi, n, {}, options.equivalence.dual);
  Bounds pn = primal_from_dual_n(space, x, n, options.equivalence.dual);
  Scalar phix = Scalar::in_mode(phi(x), mode);
  Bounds xn{max(pn.lower, phix / dn.upper), min(pn.upper, nx)};
  xn.lower = min(xn.lower, xn.upper);
  r.values = {{"norm", point(nx)}, {"phi(x)", point(phix)}, {"dual_norm_n(phi)", dn}, {"norm_n", xn}};
  const Scalar half = Scalar::in_mode(Rational(1, 2), mode), two = Scalar::in_mode(2, mode);
  Tally t;
  t.add(r, "1/2 <= ||x||_n", bound_le(half, half, xn.lower, xn.upper));
  t.add(r, "||x||_n <= ||x||", bound_le(xn.upper, xn.lower, nx, nx));
  t.add(r, "||x|| <= 2", bound_le(nx, nx, two, two));
  settle(r, t);
  if (fc == 0 && r.status == Verdict::verified) {
    r.status = Verdict::inconclusive;
    r.detail = why;
  }
  return r;
}

GluingReport gluing_lemma4(const NormSpace& space, const Ordinal& eta, const Ordinal& xi, const BlockTree& tree, const Rational& C1,
                           const Rational& C2, const std::optional<std::vector<FsFunctional>>& functionals,
                           const GluingOptions& options) {
  if (!(eta < xi)) throw DomainError("eta must be smaller than xi");
  if (C1 < 1 || C2 < 1) throw DomainError("constants must be >= 1");
  if (tree.mode != EquivalenceMode::c0) throw DomainError("lemma 4 needs a c0 block tree");
  const Mode mode = mode_of(space);
  GluingReport r;
  r.lemma = 4;
  r.parameters = {{"space", space.str()}, {"eta", eta.str()},       {"xi", xi.str()},
                  {"K", to_string(tree.K)}, {"C1", to_string(C1)}, {"C2", to_string(C2)}};
  if (!certify_into(r, tree, space, options)) return r;

  auto fit = fit_scc(tree, xi, eta, 1 / C2, options.scc);
  if (!fit) {
    r.status = Verdict::precondition_failed;
    r.detail = "no branch carries a special convex combination";
    return r;
  }
  r.scc = fit->scc;
  r.parameters["branch"] = fit->branch;
  const auto& lim = options.equivalence.dual.limits;
  std::vector<FsFunctional> fs;
  if (functionals) {
    fs.assign(functionals->begin(), functionals->begin() + static_cast<std::ptrdiff_t>(std::min(functionals->size(), fit->blocks.size())));
  } else {
    for (const auto& b : fit->blocks) fs.push_back(norming_functional(space, b, lim).restricted(b.support()));
  }
  std::string why;
  int fc = check_functionals(space, fit->blocks, fs, options, why);
  if (fc < 0) {
    r.status = Verdict::precondition_failed;
    r.detail = why;
    return r;
  }

  FsVector x;
  FsFunctional phi;
  for (std::size_t i = 0; i < fit->blocks.size(); ++i) {
    x = x + fit->blocks[i];
    phi = phi + fs[i].scaled(fit->scc.coefficients[i]);
  }
  r.vector = x;
  r.functional = phi;
  const Family s_eta = Family::schreier(eta);
  Scalar nx = norm(space, x, lim);
  Bounds da = dual_assoc_norm(space, phi, s_eta, {}, options.equivalence.dual);
  Bounds pa = primal_from_dual(space, x, s_eta, options.equivalence.dual);
  Scalar phix = Scalar::in_mode(phi(x), mode);
  Bounds xa{max(pa.lower, phix / da.upper), min(pa.upper, nx)};
  xa.lower = min(xa.lower, xa.upper);
  r.values = {{"norm", point(nx)}, {"phi(x)", point(phix)}, {"dual_assoc_norm(phi)", da}, {"assoc_norm", xa}};
  const Scalar low = Scalar::in_mode(1 / (2 * C1), mode), K = Scalar::in_mode(tree.K, mode);
  Tally t;
  t.add(r, "1/(2 C1) <= |x|_eta", bound_le(low, low, xa.lower, xa.upper));
  t.add(r, "|x|_eta <= ||x||", bound_le(xa.upper, xa.lower, nx, nx));
  t.add(r, "||x|| <= K", bound_le(nx, nx, K, K));
  settle(r, t);
  if (r.status == Verdict::verified && (fc == 0 || !space.exact())) {
    r.status = Verdict::inconclusive;
    r.detail = fc == 0 ? why : "floating mode: bimonotonicity only approximate";
  }
  return r;
}

}  // namespace dlab
