#include "dlab/block_tree.hpp"

#include <functional>
#include <map>
#include <set>

#include "dlab/errors.hpp"
#include "dlab/family_ops.hpp"

namespace dlab {

std::string to_string(EquivalenceMode m) { return m == EquivalenceMode::l1 ? "l1" : "c0"; }

EquivalenceMode parse_equivalence_mode(std::string_view s) {
  if (s == "l1") return EquivalenceMode::l1;
  if (s == "c0") return EquivalenceMode::c0;
  throw ParseError("equivalence mode must be l1 or c0");
}

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::certified:
      return "certified";
    case CertStatus::violated:
      return "violated";
    case CertStatus::inconclusive:
      return "inconclusive";
    case CertStatus::precondition_failed:
      return "precondition_failed";
  }
  return "?";
}

std::vector<FsVector> BlockTree::blocks(const Sequence& node) const {
  std::vector<FsVector> out;
  for (Label l : node) {
    if (l < 0 || static_cast<std::size_t>(l) >= vectors.size()) throw DomainError("tree label outside the vector table");
    out.push_back(vectors[static_cast<std::size_t>(l)]);
  }
  return out;
}

nlohmann::json BlockTree::to_json() const {
  nlohmann::json v = nlohmann::json::array(), n = nlohmann::json::array();
  for (const auto& x : vectors) v.push_back(x.to_json());
  for (const auto& s : tree.nodes()) n.push_back(s);
  return {{"mode", to_string(mode)}, {"K", dlab::to_string(K)}, {"vectors", v}, {"nodes", n}};
}

BlockTree BlockTree::from_json(const nlohmann::json& j) {
  try {
    BlockTree t;
    t.mode = parse_equivalence_mode(j.at("mode").get<std::string>());
    t.K = parse_rational(j.at("K").get<std::string>());
    for (const auto& v : j.at("vectors")) t.vectors.push_back(vector_from_json(v));
    std::vector<Sequence> nodes;
    for (const auto& n : j.at("nodes")) nodes.push_back(n.get<Sequence>());
    t.tree = FiniteTree::from_nodes(std::move(nodes));
    for (const auto& s : t.tree.nodes()) t.blocks(s);
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("block tree json: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("block tree json: ") + e.what());
  }
}

namespace {

nlohmann::json branch_json(const BranchValue& b) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& a : b.witness) w.push_back(to_string(a));
  return {{"branch", b.branch}, {"lower", b.lower.str()}, {"upper", b.upper.str()}, {"witness", w}};
}

bool normalized(const Scalar& v) {
  if (v.exact()) return v == Scalar(1);
  return approx_equal(v, Scalar(1.0), kFloatTolerance);
}

}  // namespace

nlohmann::json TreeCertificate::to_json() const {
  nlohmann::json b = nlohmann::json::array();
  for (const auto& x : branches) b.push_back(branch_json(x));
  nlohmann::json j{{"status", to_string(status)}, {"mode", to_string(mode)}, {"K", dlab::to_string(K)}, {"branches", b}};
  if (witness) j["witness"] = branch_json(*witness);
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

TreeCertificate certify_block_tree(const BlockTree& t, const NormSpace& space, const EquivalenceOptions& options) {
  TreeCertificate c;
  c.mode = t.mode;
  c.K = t.K;
  if (t.K < 1) throw DomainError("K must be >= 1");
  const Mode mode = space.exact() ? Mode::exact : Mode::floating;
  const Scalar K = Scalar::in_mode(t.K, mode);

  std::set<Label> used;
  for (const auto& s : t.tree.nodes()) used.insert(s.begin(), s.end());
  for (Label l : used) {
    auto x = t.blocks({l})[0];
    if (!normalized(norm(space, x, options.dual.limits))) {
      c.status = CertStatus::precondition_failed;
      c.detail = "label " + std::to_string(l) + " is not normalized";
      return c;
    }
  }
  for (const auto& node : t.tree.maximal_nodes()) {
    auto xs = t.blocks(node);
    try {
      require_block_sequence(xs);
    } catch (const DomainError& e) {
      c.status = CertStatus::precondition_failed;
      c.detail = "branch is not a block sequence";
      c.witness = BranchValue{node, Scalar(0), Scalar(0), {}};
      return c;
    }
    BranchValue bv{node, Scalar(0), Scalar(0), {}};
    CertStatus st = CertStatus::certified;
    if (t.mode == EquivalenceMode::l1) {
      EquivalenceOptions opt = options;
      if (!opt.decide_at) opt.decide_at = 1 / t.K;
      auto eb = l1_lower_value(space, xs, opt);
      bv.lower = eb.lower;
      bv.upper = eb.upper;
      bv.witness = eb.witness;
      if (bv.upper * K < Scalar(1)) {
        st = CertStatus::violated;
      } else if (bv.lower * K < Scalar(1)) {
        st = CertStatus::inconclusive;
      }
    } else {
      bv.lower = bv.upper = c0_upper_value(space, xs, options.dual.limits);
      bv.witness.assign(xs.size(), Rational(1));
      // Lower c0 estimate holds with constant 1 by bimonotonicity.
      if (bv.upper > K) st = CertStatus::violated;
    }
    if (st == CertStatus::violated && c.status != CertStatus::violated) {
      c.status = st;
      c.witness = bv;
    } else if (st == CertStatus::inconclusive && c.status == CertStatus::certified) {
      c.status = st;
      c.witness = bv;
    }
    c.branches.push_back(std::move(bv));
  }
  return c;
}

Family tree_to_family(const BlockTree& t, std::uint32_t universe) {
  std::set<FinSet, decltype(&shortlex_less)> sets(&shortlex_less);
  sets.insert(FinSet{});
  for (const auto& node : t.tree.maximal_nodes()) {
    std::vector<std::uint32_t> floor;
    for (const auto& x : t.blocks(node)) floor.push_back(x.max_index());
    std::vector<std::uint32_t> cur;
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t lo) {
      if (i == floor.size()) {
        sets.insert(FinSet(cur));
        return;
      }
      for (std::uint32_t m = std::max(lo, floor[i]); m <= universe; ++m) {
        cur.push_back(m);
        rec(i + 1, m + 1);
        cur.pop_back();
      }
    };
    rec(0, 1);
  }
  return Family::explicit_sets(std::vector<FinSet>(sets.begin(), sets.end()));
}

nlohmann::json SearchResult::to_json() const {
  nlohmann::json j{{"success", tree.has_value()},
                   {"maximal_sets", maximal_sets},
                   {"candidates_tried", candidates_tried},
                   {"branch_failures", branch_failures}};
  if (failed_set) j["failed_set"] = failed_set->str();
  if (tree) j["tree"] = tree->to_json();
  if (certificate) j["certificate"] = certificate->to_json();
  return j;
}

namespace {

// Normalized average of the basis over the maximal S_beta set beginning at p.
std::optional<FsVector> average_block(const NormSpace& space, unsigned beta, std::uint32_t p, std::size_t cap,
                                      const NormLimits& limits) {
  const Family s = Family::schreier(Ordinal::natural(beta));
  std::vector<std::uint32_t> f{p};
  for (std::uint32_t q = p + 1;; ++q) {
    f.push_back(q);
    if (!s.contains(f)) {
      f.pop_back();
      break;
    }
    if (f.size() > cap) return std::nullopt;
  }
  FsVector a = FsVector::average(FinSet(f));
  Scalar v = norm(space, a, limits);
  Rational r = v.exact() ? v.rational() : Rational(v.to_double());
  return a.scaled(1 / r);
}

using Scheme = std::function<std::optional<FsVector>(std::uint32_t m, std::uint32_t p)>;

}  // namespace

SearchResult index_lower_bound_search(const NormSpace& space, const Family& fam, const Rational& K, std::uint32_t universe,
                                      EquivalenceMode mode, const SearchOptions& options) {
  SearchResult res;
  std::vector<FinSet> maximal;
  for (const auto& f : enumerate(fam, universe))
    if (!f.empty() && is_maximal(fam, f, universe)) maximal.push_back(f);
  res.maximal_sets = maximal.size();

  const NormLimits& lim = options.equivalence.dual.limits;
  std::vector<Scheme> schemes;
  schemes.push_back([](std::uint32_t m, std::uint32_t p) -> std::optional<FsVector> {
    if (p > m) return std::nullopt;
    return FsVector::basis(m);
  });
  std::map<std::pair<unsigned, std::uint32_t>, std::optional<FsVector>> averages;
  const std::size_t cap = std::min(options.max_branch_support, lim.max_support);
  for (unsigned beta : options.average_schedule)
    schemes.push_back([&, beta](std::uint32_t m, std::uint32_t p) {
      const auto key = std::make_pair(beta, std::max(m, p));
      auto it = averages.find(key);
      if (it == averages.end()) it = averages.emplace(key, average_block(space, beta, key.second, cap, lim)).first;
      return it->second;
    });
  if (!options.user_blocks.empty())
    schemes.push_back([&](std::uint32_t m, std::uint32_t p) -> std::optional<FsVector> {
      for (const auto& b : options.user_blocks)
        if (b.min_index() >= std::max(m, p)) return b;
      return std::nullopt;
    });

  BlockTree t;
  t.mode = mode;
  t.K = K;
  std::map<std::string, Label> table;
  std::vector<Sequence> branches;
  for (const auto& f : maximal) {
    bool ok = false;
    for (const auto& scheme : schemes) {
      ++res.candidates_tried;
      std::vector<FsVector> xs;
      std::uint32_t p = 1;
      bool built = true;
      for (auto m : f.elements()) {
        auto x = scheme(m, p);
        if (!x) {
          built = false;
          break;
        }
        p = x->max_index() + 1;
        xs.push_back(*x);
      }
      std::size_t support = 0;
      for (const auto& x : xs) support += x.size();
      if (!built || support > options.max_branch_support) continue;
      BlockTree one;
      one.mode = mode;
      one.K = K;
      Sequence seq;
      for (std::size_t i = 0; i < xs.size(); ++i) seq.push_back(static_cast<Label>(i));
      one.vectors = xs;
      one.tree = FiniteTree::from_branches({seq});
      try {
        if (certify_block_tree(one, space, options.equivalence).status != CertStatus::certified) continue;
      } catch (const ResourceError&) {
        continue;
      }
      Sequence branch;
      for (const auto& x : xs) {
        auto [it, fresh] = table.emplace(x.str(), static_cast<Label>(t.vectors.size()));
        if (fresh) t.vectors.push_back(x);
        branch.push_back(it->second);
      }
      branches.push_back(branch);
      ok = true;
      break;
    }
    if (!ok) {
      ++res.branch_failures;
      if (!res.failed_set) res.failed_set = f;
    }
  }
  if (res.branch_failures > 0) return res;
  t.tree = FiniteTree::from_branches(branches);
  auto cert = certify_block_tree(t, space, options.equivalence);
  res.certificate = cert;
  if (cert.status == CertStatus::certified) res.tree = std::move(t);
  return res;
}

}  // namespace dlab
