#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <unistd.h>

#include "dlab/asymptotic.hpp"
#include "dlab/block_tree.hpp"
#include "dlab/distortion.hpp"
#include "dlab/dual.hpp"
#include "dlab/errors.hpp"
#include "dlab/family_ops.hpp"
#include "dlab/gluing.hpp"
#include "dlab/norm.hpp"
#include "dlab/ordinal.hpp"
#include "dlab/scc.hpp"
#include "dlab/symbolic.hpp"
#include "dlab/tree.hpp"
#include "dlab/version.hpp"
#include "suites.hpp"

namespace dlab::cli {

namespace {

using nlohmann::json;

struct Global {
  std::string mode = "exact";
  std::uint32_t universe = 12;
  std::uint64_t seed = 1;
  std::string out_path;
  bool json = false;
};

struct Outcome {
  int code = kPass;
  json result;
  std::string text;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write " + tmp.string());
    f << content;
    f.flush();
    if (!f) throw IoError("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot replace " + path);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Mode mode_of(const Global& g) {
  if (g.mode == "exact") return Mode::exact;
  if (g.mode == "float") return Mode::floating;
  throw ParseError("--mode must be exact or float");
}

NormSpace space_of(const std::string& text, const Global& g) { return parse_space(text).with_mode(mode_of(g)); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::uint32_t to_index(const std::string& s) {
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(s, &used);
    if (used != s.size() || v == 0 || v > 0xffffffffUL) throw ParseError("");
    return static_cast<std::uint32_t>(v);
  } catch (const std::exception&) {
    throw ParseError("bad index '" + s + "'");
  }
}

// "a..b" or any finset syntax.
FinSet set_of(const std::string& text) {
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    if (!a.empty() && a[0] == 'e') a.erase(0, 1);
    if (!b.empty() && b[0] == 'e') b.erase(0, 1);
    std::uint32_t lo = to_index(a), hi = to_index(b);
    if (hi < lo) throw ParseError("empty range '" + text + "'");
    return FinSet::interval(lo, hi);
  }
  return parse_finset(text);
}

// "e4,e5", "e4..e7" or a JSON array of vectors.
std::vector<FsVector> vectors_of(const std::string& text) {
  std::vector<FsVector> out;
  if (!text.empty() && text[0] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad vector list: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("vector list must be a JSON array");
    for (const auto& v : j) out.push_back(vector_from_json(v));
    return out;
  }
  for (const auto& item : split(text, ',')) {
    if (item.find("..") != std::string::npos) {
      for (auto i : set_of(item)) out.push_back(FsVector::basis(i));
    } else {
      out.push_back(parse_basis_name(item));
    }
  }
  return out;
}

std::vector<FsFunctional> functionals_of(const std::string& text) {
  std::vector<FsFunctional> out;
  for (auto& v : vectors_of(text)) out.push_back(FsFunctional(v));
  return out;
}

Rational rational_of(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::verified: return kPass;
    case Verdict::refuted: return kFail;
    case Verdict::inconclusive: return kInconclusive;
    case Verdict::precondition_failed: return kPrecondition;
  }
  return kInternal;
}

int check_code(CheckOutcome c) {
  switch (c) {
    case CheckOutcome::pass: return kPass;
    case CheckOutcome::fail: return kFail;
    case CheckOutcome::inconclusive: return kInconclusive;
  }
  return kInternal;
}

int cert_code(CertStatus s) {
  switch (s) {
    case CertStatus::certified: return kPass;
    case CertStatus::violated: return kFail;
    case CertStatus::inconclusive: return kInconclusive;
    case CertStatus::precondition_failed: return kPrecondition;
  }
  return kInternal;
}

json sets_json(const std::vector<FinSet>& sets) {
  json a = json::array();
  for (const auto& s : sets) a.push_back(s.str());
  return a;
}

std::string sets_text(const std::vector<FinSet>& sets) {
  std::string t = std::to_string(sets.size()) + " sets";
  for (const auto& s : sets) t += "\n" + s.str();
  return t;
}

Outcome lemma_outcome(const GluingReport& r) {
  std::string t = "lemma " + std::to_string(r.lemma) + ": " + to_string(r.status);
  for (const auto& [name, b] : r.values)
    t += "\n" + name + " = " + (b.exact() ? b.lower.str() : "[" + b.lower.str() + ", " + b.upper.str() + "]");
  for (const auto& c : r.checks) t += "\n" + c;
  if (!r.detail.empty()) t += "\n" + r.detail;
  return {verdict_code(r.status), r.to_json(), t};
}

BlockTree tree_arg(const std::string& file, const std::string& branch, EquivalenceMode mode, const Rational& K) {
  if (!file.empty()) {
    BlockTree t;
    try {
      t = BlockTree::from_json(json::parse(read_file(file)));
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad tree file: ") + e.what());
    }
    t.K = K;
    return t;
  }
  if (branch.empty()) throw ParseError("one of --tree or --branch is required");
  std::vector<FinSet> branches;
  for (const auto& b : split(branch, ';')) branches.push_back(set_of(b));
  return basis_block_tree(branches, mode, K);
}

using Action = std::function<Outcome()>;

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Global g;
  Action action;
  std::string command;

  CLI::App app{"Finite laboratory for Schreier families, Tsirelson-type norms and gluing constructions", "dlab-cli"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--mode", g.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--universe", g.universe, "Universe {1..N} for enumerations");
  app.add_option("--seed", g.seed, "Seed for randomized corpora");
  app.add_option("--out", g.out_path, "Write the JSON report here (atomic replace)");
  app.add_flag("--json", g.json, "Print the JSON report");

  auto on = [&](CLI::App* sub, std::string name, Action a) {
    sub->callback([&, name, a] {
      command = name;
      action = a;
    });
  };

  // ord
  std::string ord_a;
  std::uint64_t ord_n = 1;
  {
    auto* ord = app.add_subcommand("ord", "Ordinals below w^w");
    ord->require_subcommand(1);
    auto* show = ord->add_subcommand("show", "Canonical form and kind");
    show->add_option("alpha", ord_a)->required();
    on(show, "ord show", [&] {
      Ordinal a = parse_ordinal(ord_a);
      Decomposition d = successor_decompose(a);
      std::string kind = d.kind == OrdinalKind::zero ? "zero" : d.kind == OrdinalKind::successor ? "successor" : "limit";
      json r = {{"ordinal", a.str()}, {"kind", kind}};
      if (d.kind == OrdinalKind::successor) r["predecessor"] = d.predecessor.str();
      return Outcome{kPass, r, a.str() + " (" + kind + ")"};
    });
    auto* fs = ord->add_subcommand("fs", "Fundamental sequence term");
    fs->add_option("alpha", ord_a)->required();
    fs->add_option("n", ord_n)->required();
    on(fs, "ord fs", [&] {
      Ordinal v = fundamental_sequence(parse_ordinal(ord_a), ord_n);
      return Outcome{kPass, {{"ordinal", parse_ordinal(ord_a).str()}, {"n", ord_n}, {"term", v.str()}}, v.str()};
    });
    auto* pw = ord->add_subcommand("pow", "Symbolic w^alpha");
    pw->add_option("alpha", ord_a)->required();
    on(pw, "ord pow", [&] {
      SymbolicOrdinal v = symbolic_omega_pow(parse_ordinal(ord_a));
      return Outcome{kPass, {{"ordinal", parse_ordinal(ord_a).str()}, {"omega_pow", v.str()}}, v.str()};
    });
  }

  // fam
  std::string fam_f, fam_set, fam_other;
  unsigned fam_k = 1;
  {
    auto* fam = app.add_subcommand("fam", "Families of finite sets");
    fam->require_subcommand(1);
    auto* member_cmd = fam->add_subcommand("member", "Membership; exit 1 when not a member");
    member_cmd->add_option("--family", fam_f)->required();
    member_cmd->add_option("--set", fam_set)->required();
    on(member_cmd, "fam member", [&] {
      Family f = parse_family(fam_f);
      FinSet s = set_of(fam_set);
      bool m = member(f, s);
      return Outcome{m ? kPass : kFail, {{"family", f.str()}, {"set", s.str()}, {"member", m}}, m ? "true" : "false"};
    });
    auto* en = fam->add_subcommand("enumerate", "Members inside the universe");
    en->add_option("--family", fam_f)->required();
    on(en, "fam enumerate", [&] {
      Family f = parse_family(fam_f);
      auto sets = enumerate(f, g.universe);
      return Outcome{kPass, {{"family", f.str()}, {"count", sets.size()}, {"members", sets_json(sets)}}, sets_text(sets)};
    });
    auto* mx = fam->add_subcommand("maximal", "Maximality inside the universe; exit 1 when not maximal");
    mx->add_option("--family", fam_f)->required();
    mx->add_option("--set", fam_set)->required();
    on(mx, "fam maximal", [&] {
      Family f = parse_family(fam_f);
      FinSet s = set_of(fam_set);
      bool m = member(f, s) && is_maximal(f, s, g.universe);
      return Outcome{m ? kPass : kFail, {{"family", f.str()}, {"set", s.str()}, {"maximal", m}}, m ? "true" : "false"};
    });
    auto* reg = fam->add_subcommand("regular", "Hereditary and spreading checks");
    reg->add_option("--family", fam_f)->required();
    on(reg, "fam regular", [&] {
      Family f = parse_family(fam_f);
      RegularityReport r = check_regular(f, g.universe);
      json j = {{"family", f.str()}, {"hereditary", r.hereditary}, {"spreading", r.spreading},
                {"compactness", r.compactness}, {"members_checked", r.members_checked}};
      json hc = json::array(), sc = json::array();
      for (const auto& [a, b] : r.hereditary_counterexamples) hc.push_back({a.str(), b.str()});
      for (const auto& [a, b] : r.spreading_counterexamples) sc.push_back({a.str(), b.str()});
      j["hereditary_counterexamples"] = hc;
      j["spreading_counterexamples"] = sc;
      bool ok = r.hereditary && r.spreading;
      return Outcome{ok ? kPass : kFail, j,
                     std::string("hereditary ") + (r.hereditary ? "yes" : "no") + ", spreading " + (r.spreading ? "yes" : "no")};
    });
    auto* der = fam->add_subcommand("derivative", "Members of the k-th derivative");
    der->add_option("--family", fam_f)->required();
    der->add_option("--k", fam_k);
    on(der, "fam derivative", [&] {
      Family f = parse_family(fam_f);
      auto sets = enumerate(iterated_derivative(f, fam_k, g.universe), g.universe);
      return Outcome{kPass, {{"family", f.str()}, {"k", fam_k}, {"count", sets.size()}, {"members", sets_json(sets)}},
                     sets_text(sets)};
    });
    auto* idx = fam->add_subcommand("index", "Symbolic Cantor-Bendixson index");
    idx->add_option("--family", fam_f)->required();
    on(idx, "fam index", [&] {
      Family f = parse_family(fam_f);
      IndexResult r = index_symbolic(f);
      return Outcome{kPass, {{"family", f.str()}, {"index", r.value.str()}, {"product_rule_assumed", r.product_rule_assumed}},
                     r.value.str() + (r.product_rule_assumed ? " (product rule assumed)" : "")};
    });
    auto* tail = fam->add_subcommand("tail", "Least n with every member of the first family above n in the second");
    tail->add_option("--family", fam_f)->required();
    tail->add_option("--other", fam_other)->required();
    on(tail, "fam tail", [&] {
      Family a = parse_family(fam_f), b = parse_family(fam_other);
      auto n = tail_domination(a, b, g.universe);
      json j = {{"family", a.str()}, {"other", b.str()}, {"threshold", n ? json(*n) : json(nullptr)}};
      return Outcome{n ? kPass : kFail, j, n ? std::to_string(*n) : "none inside the universe"};
    });
  }

  // tree
  std::string tree_space, tree_file, tree_family, tree_k = "2";
  bool tree_c0 = false;
  {
    auto* tree = app.add_subcommand("tree", "Trees and block trees");
    tree->require_subcommand(1);
    auto* ord_cmd = tree->add_subcommand("order", "Order of a family viewed as a tree");
    ord_cmd->add_option("--family", tree_family)->required();
    on(ord_cmd, "tree order", [&] {
      Family f = parse_family(tree_family);
      FiniteTree t = family_as_tree(f, g.universe);
      std::size_t o = order(t);
      return Outcome{kPass, {{"family", f.str()}, {"nodes", t.size()}, {"height", t.height()}, {"order", o}},
                     "order " + std::to_string(o)};
    });
    auto* cert = tree->add_subcommand("certify", "Certify a block tree file");
    cert->add_option("--space", tree_space)->required();
    cert->add_option("--tree", tree_file)->required();
    on(cert, "tree certify", [&] {
      BlockTree t;
      try {
        t = BlockTree::from_json(json::parse(read_file(tree_file)));
      } catch (const json::exception& e) {
        throw ParseError(std::string("bad tree file: ") + e.what());
      }
      TreeCertificate c = certify_block_tree(t, space_of(tree_space, g));
      return Outcome{cert_code(c.status), c.to_json(), to_string(c.status) + (c.detail.empty() ? "" : ": " + c.detail)};
    });
    auto* search = tree->add_subcommand("search", "Build a block tree indexed by a family");
    search->add_option("--space", tree_space)->required();
    search->add_option("--family", tree_family)->required();
    search->add_option("--K", tree_k);
    search->add_flag("--c0", tree_c0, "c0 blocks instead of l1");
    on(search, "tree search", [&] {
      SearchResult r = index_lower_bound_search(space_of(tree_space, g), parse_family(tree_family), rational_of(tree_k),
                                                g.universe, tree_c0 ? EquivalenceMode::c0 : EquivalenceMode::l1);
      std::string t = r.tree ? "found tree over " + std::to_string(r.maximal_sets) + " maximal sets"
                             : "no tree; failed at " + (r.failed_set ? r.failed_set->str() : std::string("?"));
      return Outcome{r.tree ? kPass : kFail, r.to_json(), t};
    });
  }

  // norm
  std::string n_space, n_vec, n_family;
  unsigned n_n = 2;
  bool n_allowable = false;
  {
    auto* nm = app.add_subcommand("norm", "Norms, norming functionals and duals");
    nm->require_subcommand(1);
    auto* ev = nm->add_subcommand("eval", "Norm of a vector");
    ev->add_option("--space", n_space)->required();
    ev->add_option("--vec", n_vec)->required();
    on(ev, "norm eval", [&] {
      NormSpace s = space_of(n_space, g);
      FsVector x = parse_vector(n_vec);
      Scalar v = norm(s, x);
      return Outcome{kPass, {{"space", s.str()}, {"vector", x.to_json()}, {"norm", v.str()}, {"exact", v.exact()}}, v.str()};
    });
    auto* fn = nm->add_subcommand("functional", "Norming functional");
    fn->add_option("--space", n_space)->required();
    fn->add_option("--vec", n_vec)->required();
    on(fn, "norm functional", [&] {
      NormSpace s = space_of(n_space, g);
      FsVector x = parse_vector(n_vec);
      FsFunctional f = norming_functional(s, x);
      return Outcome{kPass,
                     {{"space", s.str()}, {"vector", x.to_json()}, {"functional", f.coords().to_json()}, {"value", Scalar(f(x)).str()}},
                     f.coords().str()};
    });
    auto* nn = nm->add_subcommand("n", "Sup over at most n successive intervals");
    nn->add_option("--space", n_space)->required();
    nn->add_option("--n", n_n)->required();
    nn->add_option("--vec", n_vec)->required();
    on(nn, "norm n", [&] {
      NormSpace s = space_of(n_space, g);
      FsVector x = parse_vector(n_vec);
      Scalar v = norm_n(s, n_n, x);
      return Outcome{kPass, {{"space", s.str()}, {"n", n_n}, {"vector", x.to_json()}, {"norm_n", v.str()}}, v.str()};
    });
    auto* as = nm->add_subcommand("assoc", "Associated norm over a family");
    as->add_option("--space", n_space)->required();
    as->add_option("--family", n_family)->required();
    as->add_option("--vec", n_vec)->required();
    as->add_flag("--allowable", n_allowable);
    on(as, "norm assoc", [&] {
      NormSpace s = space_of(n_space, g);
      Family f = parse_family(n_family);
      FsVector x = parse_vector(n_vec);
      Scalar v = assoc_norm(s, f, x, n_allowable ? AssocVariant::allowable : AssocVariant::admissible);
      return Outcome{kPass,
                     {{"space", s.str()}, {"family", f.str()}, {"variant", n_allowable ? "allowable" : "admissible"},
                      {"vector", x.to_json()}, {"assoc_norm", v.str()}},
                     v.str()};
    });
    auto* du = nm->add_subcommand("dual", "Two-sided bounds on a dual norm; exit 2 when the gap stays open");
    du->add_option("--space", n_space)->required();
    du->add_option("--vec", n_vec, "functional coordinates")->required();
    du->add_option("--n", n_n, "dual of the interval norm instead");
    du->add_option("--family", n_family, "dual of the associated norm instead");
    on(du, "norm dual", [&, du] {
      NormSpace s = space_of(n_space, g);
      FsFunctional phi(parse_vector(n_vec));
      Bounds b;
      std::string which = "dual_norm";
      if (!n_family.empty()) {
        b = dual_assoc_norm(s, phi, parse_family(n_family));
        which = "dual_assoc_norm";
      } else if (du->count("--n")) {
        b = dual_intervals_norm(s, phi, n_n);
        which = "dual_norm_n";
      } else {
        b = dual_norm(s, phi);
      }
      json j = {{"space", s.str()}, {"functional", phi.coords().to_json()}, {"kind", which}, {"bounds", b.to_json()}};
      std::string t = b.exact() ? b.lower.str() : "[" + b.lower.str() + ", " + b.upper.str() + "]";
      return Outcome{b.inconclusive ? kInconclusive : kPass, j, t};
    });
  }

  // scc
  std::string scc_xi, scc_eta, scc_eps;
  std::uint32_t scc_start = 0;
  {
    auto* sc = app.add_subcommand("scc", "Special convex combination by repeated averages");
    sc->add_option("--xi", scc_xi)->required();
    sc->add_option("--eta", scc_eta)->required();
    sc->add_option("--eps", scc_eps)->required();
    sc->add_option("--start", scc_start);
    on(sc, "scc", [&] {
      std::optional<std::uint32_t> start;
      if (scc_start) start = scc_start;
      try {
        Scc s = build_scc(parse_ordinal(scc_xi), parse_ordinal(scc_eta), rational_of(scc_eps), start);
        return Outcome{kPass, s.to_json(),
                       "start " + std::to_string(s.start) + ", |F| = " + std::to_string(s.support.size()) + ", max mass " +
                           Scalar(s.max_mass).str()};
      } catch (const NeedsLargerStart& e) {
        return Outcome{kPrecondition, {{"error", e.what()}, {"minimal_start", e.minimal_start()}}, e.what()};
      }
    });
  }

  // lemmas
  std::string l_space, l_blocks, l_funcs, l_eta = "1", l_xi = "2", l_tree, l_branch, l_k = "2", l_c1 = "2", l_c2 = "2";
  unsigned l_n = 2;
  {
    auto* l1 = app.add_subcommand("lemma1", "Gluing vector: 1/2 <= ||x|| <= ||x||_n <= 2");
    l1->add_option("--space", l_space)->required();
    l1->add_option("--n", l_n)->required();
    l1->add_option("--blocks", l_blocks)->required();
    on(l1, "lemma1", [&] { return lemma_outcome(gluing_lemma1(space_of(l_space, g), l_n, vectors_of(l_blocks))); });

    auto* l2 = app.add_subcommand("lemma2", "SCC vector on a block tree branch: 1/K <= ||x|| <= |x|_eta <= 2 C1");
    l2->add_option("--space", l_space)->required();
    l2->add_option("--eta", l_eta);
    l2->add_option("--xi", l_xi);
    l2->add_option("--tree", l_tree, "block tree JSON file");
    l2->add_option("--branch", l_branch, "basis-vector branches, ';'-separated sets or ranges");
    l2->add_option("--K", l_k);
    l2->add_option("--C1", l_c1);
    l2->add_option("--C2", l_c2);
    on(l2, "lemma2", [&] {
      BlockTree t = tree_arg(l_tree, l_branch, EquivalenceMode::l1, rational_of(l_k));
      return lemma_outcome(gluing_lemma2(space_of(l_space, g), parse_ordinal(l_eta), parse_ordinal(l_xi), t,
                                         rational_of(l_c1), rational_of(l_c2)));
    });

    auto* l3 = app.add_subcommand("lemma3", "c0 gluing: 1/2 <= ||x||_n <= ||x|| <= 2");
    l3->add_option("--space", l_space)->required();
    l3->add_option("--n", l_n)->required();
    l3->add_option("--blocks", l_blocks)->required();
    l3->add_option("--functionals", l_funcs, "defaults to e*_m for basis blocks e_m");
    l3->add_option("--K", l_k);
    on(l3, "lemma3", [&] {
      auto blocks = vectors_of(l_blocks);
      std::vector<FsFunctional> fs;
      if (!l_funcs.empty()) {
        fs = functionals_of(l_funcs);
      } else {
        for (const auto& b : blocks) {
          if (b.size() != 1 || b.entries()[0].value != 1) throw ParseError("--functionals is required unless the blocks are basis vectors");
          fs.push_back(FsFunctional::coordinate(b.min_index()));
        }
      }
      return lemma_outcome(gluing_lemma3(space_of(l_space, g), l_n, blocks, fs, rational_of(l_k)));
    });

    auto* l4 = app.add_subcommand("lemma4", "c0 SCC functional: 1/(2 C1) <= |x|_eta <= ||x|| <= K");
    l4->add_option("--space", l_space)->required();
    l4->add_option("--eta", l_eta);
    l4->add_option("--xi", l_xi);
    l4->add_option("--tree", l_tree);
    l4->add_option("--branch", l_branch);
    l4->add_option("--K", l_k);
    l4->add_option("--C1", l_c1);
    l4->add_option("--C2", l_c2);
    l4->add_option("--functionals", l_funcs);
    on(l4, "lemma4", [&] {
      BlockTree t = tree_arg(l_tree, l_branch, EquivalenceMode::c0, rational_of(l_k));
      std::optional<std::vector<FsFunctional>> fs;
      if (!l_funcs.empty()) fs = functionals_of(l_funcs);
      return lemma_outcome(gluing_lemma4(space_of(l_space, g), parse_ordinal(l_eta), parse_ordinal(l_xi), t,
                                         rational_of(l_c1), rational_of(l_c2), fs));
    });
  }

  // spreading, asymp
  std::string a_space, a_alpha = "1", a_c = "2", a_blocks;
  bool a_allowable = false;
  {
    auto* sp = app.add_subcommand("spreading", "l1^alpha spreading model check on a block sequence");
    sp->add_option("--space", a_space)->required();
    sp->add_option("--alpha", a_alpha);
    sp->add_option("--C", a_c);
    sp->add_option("--blocks", a_blocks, "defaults to the unit vector basis");
    on(sp, "spreading", [&] {
      std::vector<FsVector> blocks;
      if (a_blocks.empty())
        for (std::uint32_t i = 1; i <= g.universe; ++i) blocks.push_back(FsVector::basis(i));
      else
        blocks = vectors_of(a_blocks);
      SpreadingResult r = check_spreading_model(space_of(a_space, g), blocks, parse_ordinal(a_alpha), rational_of(a_c), g.universe);
      std::string t = to_string(r.outcome) + " (" + std::to_string(r.sets_checked) + " sets)";
      if (r.witness_set) t += "; witness " + r.witness_set->str();
      return Outcome{check_code(r.outcome), r.to_json(), t};
    });
    auto* as = app.add_subcommand("asymp", "Measured l1^alpha asymptoticity constant on the structured corpus");
    as->add_option("--space", a_space)->required();
    as->add_option("--alpha", a_alpha);
    as->add_flag("--allowable", a_allowable);
    on(as, "asymp", [&] {
      AsymptoticityResult r = measure_asymptoticity(space_of(a_space, g), parse_ordinal(a_alpha), g.universe,
                                                    a_allowable ? AssocVariant::allowable : AssocVariant::admissible);
      json j = r.to_json();
      j["measurement"] = "section measurement at universe " + std::to_string(g.universe);
      std::string t = r.exact() ? "C = " + r.lower.str() : "C in [" + r.lower.str() + ", " + r.upper.str() + "]";
      return Outcome{r.exact() ? kPass : kInconclusive, j, t + " at universe " + std::to_string(g.universe)};
    });
  }

  // distort
  std::string d_space, d_derived, d_corpus, d_basis, d_csv;
  {
    auto* ds = app.add_subcommand("distort", "Ratio extremes of a derived norm over a normalized corpus");
    ds->add_option("--space", d_space)->required();
    ds->add_option("--derived", d_derived)->required();
    ds->add_option("--corpus", d_corpus)->required();
    ds->add_option("--block-basis", d_basis, "read corpus coordinates in this block basis");
    ds->add_option("--csv", d_csv, "write per-vector rows here");
    on(ds, "distort", [&] {
      std::optional<std::vector<FsVector>> basis;
      if (!d_basis.empty()) basis = vectors_of(d_basis);
      DistortionReport r = distortion_scan(space_of(d_space, g), space_of(d_derived, g), d_corpus, basis);
      if (!d_csv.empty()) write_atomic(d_csv, r.to_csv());
      std::string t = "lambda " + r.lambda.str() + " (max " + r.ratio_max.str() + " at " + r.entries[r.argmax].id + ", min " +
                      r.ratio_min.str() + " at " + r.entries[r.argmin].id + ")";
      return Outcome{kPass, r.to_json(), t};
    });
  }

  // suite
  std::string suite_name;
  {
    auto* su = app.add_subcommand("suite", "Run an acceptance suite; exit 1 if any criterion fails");
    su->add_option("name", suite_name)->required();
    on(su, "suite", [&] {
      if (mode_of(g) != Mode::exact) throw UnsupportedError("suites run in exact mode");
      suites::SuiteResult r = suites::run_suite(suite_name, suites::SuiteConfig{g.seed});
      std::string t;
      for (const auto& c : r.criteria)
        t += (t.empty() ? "" : "\n") + std::string(c.passed ? "PASS " : "FAIL ") + std::to_string(c.id) + " " + c.name;
      return Outcome{r.passed() ? kPass : kFail, r.to_json(), t};
    });
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  if (!action) {
    err << "no command\n";
    return kUsage;
  }

  Outcome o;
  try {
    o = action();
  } catch (const PreconditionError& e) {
    o = {kPrecondition, {{"error", e.what()}}, std::string("precondition: ") + e.what()};
  } catch (const ResourceError& e) {
    o = {kResource, {{"error", e.what()}}, std::string("resource bound: ") + e.what()};
  } catch (const Error& e) {
    o = {kUsage, {{"error", e.what()}}, std::string("error: ") + e.what()};
  } catch (const json::exception& e) {
    o = {kUsage, {{"error", e.what()}}, std::string("error: ") + e.what()};
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }

  json report = {{"tool", kToolName},
                 {"version", kToolVersion},
                 {"command", command},
                 {"config", {{"args", args}, {"mode", g.mode}, {"universe", g.universe}, {"seed", g.seed}}},
                 {"mode", g.mode},
                 {"fundamental_sequence", kFundamentalSequenceConvention},
                 {"exit_code", o.code},
                 {"result", o.result}};
  const std::string dumped = report.dump(2) + "\n";
  if (!g.out_path.empty()) {
    try {
      write_atomic(g.out_path, dumped);
    } catch (const IoError& e) {
      err << e.what() << "\n";
      return kIo;
    }
  }
  if (g.json)
    out << dumped;
  else if (o.code >= kPrecondition)
    err << o.text << "\n";
  else
    out << o.text << "\n";
  return o.code;
}

}  // namespace dlab::cli
