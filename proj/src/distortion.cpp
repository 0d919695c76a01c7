#include "dlab/distortion.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <sstream>
#include <thread>

#include "dlab/errors.hpp"
#include "dlab/family.hpp"

namespace dlab {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    else if (c == ')' || c == ']' || c == '}') --depth;
    else if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
    if (depth < 0) throw ParseError("unbalanced brackets in corpus");
  }
  if (depth != 0) throw ParseError("unbalanced brackets in corpus");
  out.push_back(trim(s.substr(start)));
  return out;
}

std::uint32_t parse_index(const std::string& s) {
  std::uint32_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v == 0) throw ParseError("bad corpus index '" + s + "'");
  return v;
}

// Arguments of name(...) or nullopt when the item has another head.
std::optional<std::vector<std::string>> call_args(const std::string& item, std::string_view name) {
  if (item.size() < name.size() + 2 || item.compare(0, name.size(), name) != 0 || item[name.size()] != '(' ||
      item.back() != ')')
    return std::nullopt;
  return split_top(std::string_view(item).substr(name.size() + 1, item.size() - name.size() - 2), ',');
}

FsVector interval_average(std::uint32_t a, std::uint32_t b) {
  std::vector<std::uint32_t> f;
  for (std::uint32_t i = a; i <= b; ++i) f.push_back(i);
  return FsVector::average(FinSet(f));
}

}  // namespace

std::vector<CorpusItem> parse_corpus(std::string_view text, std::size_t max_support) {
  std::vector<CorpusItem> out;
  auto push = [&](std::string id, FsVector v) {
    if (v.empty()) throw DomainError("corpus item " + id + " is zero");
    if (v.size() > max_support) throw ResourceError("corpus item " + id + " exceeds the support cap");
    out.push_back({std::move(id), std::move(v)});
  };
  for (const auto& item : split_top(text, ';')) {
    if (item.empty()) continue;
    if (item[0] == '[' || item[0] == '{') {
      FsVector v = parse_vector(item);
      push(v.str(), v);
    } else if (auto args = call_args(item, "basis")) {
      if (args->size() != 2) throw ParseError("basis(a,b) takes two indices");
      std::uint32_t a = parse_index((*args)[0]), b = parse_index((*args)[1]);
      for (std::uint32_t i = a; i <= b; ++i) push("e" + std::to_string(i), FsVector::basis(i));
    } else if (auto args = call_args(item, "int")) {
      if (args->size() != 2) throw ParseError("int(a,b) takes two indices");
      std::uint32_t a = parse_index((*args)[0]), b = parse_index((*args)[1]);
      if (b < a) throw ParseError("empty interval in corpus");
      if (b - a + 1 > max_support) throw ResourceError("corpus interval exceeds the support cap");
      push("int(" + std::to_string(a) + "," + std::to_string(b) + ")", interval_average(a, b));
    } else if (auto args = call_args(item, "avg")) {
      if (args->size() < 2) throw ParseError("avg(<family>,m,...) needs a family and a start");
      Family fam = parse_family((*args)[0]);
      for (std::size_t k = 1; k < args->size(); ++k) {
        std::uint32_t m = parse_index((*args)[k]);
        std::vector<std::uint32_t> f;
        for (std::uint32_t q = m;; ++q) {
          f.push_back(q);
          if (!fam.contains(f)) {
            f.pop_back();
            break;
          }
          if (f.size() > max_support) throw ResourceError("avg block from " + std::to_string(m) + " exceeds the support cap");
        }
        if (f.empty()) throw DomainError("no family set starts with {" + std::to_string(m) + "}");
        push("avg(" + fam.str() + "," + std::to_string(m) + ")", FsVector::average(FinSet(f)));
      }
    } else if (item[0] == 'e') {
      push(item, parse_basis_name(item));
    } else {
      throw ParseError("unknown corpus item '" + item + "'");
    }
  }
  return out;
}

std::vector<CorpusItem> in_block_basis(const std::vector<CorpusItem>& items, const std::vector<FsVector>& basis) {
  for (std::size_t i = 0; i + 1 < basis.size(); ++i)
    if (basis[i].empty() || basis[i + 1].empty() || basis[i].max_index() >= basis[i + 1].min_index())
      throw PreconditionError("block basis is not a block sequence of nonzero vectors");
  std::vector<CorpusItem> out;
  for (const auto& it : items) {
    FsVector y;
    for (const auto& e : it.vector.entries()) {
      if (e.index > basis.size()) throw DomainError("corpus item " + it.id + " uses u_" + std::to_string(e.index) +
                                                    " beyond the block basis");
      y = y + basis[e.index - 1].scaled(e.value);
    }
    out.push_back({"u:" + it.id, y});
  }
  return out;
}

DistortionReport distortion_scan(const NormSpace& space, const NormSpace& derived, std::string_view corpus,
                                 const std::optional<std::vector<FsVector>>& block_basis,
                                 const DistortionOptions& options) {
  auto items = parse_corpus(corpus, options.max_support);
  if (block_basis) items = in_block_basis(items, *block_basis);
  if (items.empty()) throw DomainError("empty corpus");

  DistortionReport rep;
  rep.space = space.str();
  rep.derived = derived.str();
  rep.corpus = std::string(corpus);
  rep.block_basis = block_basis.has_value();
  rep.entries.resize(items.size());

  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
      try {
        const FsVector& x = items[i].vector;
        Scalar n0 = norm(space, x, options.limits);
        if (n0.sign() <= 0) throw DomainError("corpus item " + items[i].id + " has zero norm");
        Rational r = n0.exact() ? n0.rational() : Rational(n0.to_double());
        FsVector y = x.scaled(1 / r);
        DistortionEntry& e = rep.entries[i];
        e.id = items[i].id;
        e.normalized = y;
        e.base_norm = norm(space, y, options.limits);
        e.derived_norm = norm(derived, y, options.limits);
        e.ratio = e.derived_norm / e.base_norm;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, items.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  auto same = [](const Scalar& a, const Scalar& b) { return a.exact() && b.exact() ? a == b : approx_equal(a, b); };
  rep.ratio_min = rep.ratio_max = rep.entries[0].ratio;
  for (std::size_t i = 1; i < rep.entries.size(); ++i) {
    const auto& e = rep.entries[i];
    if (same(e.ratio, rep.ratio_min)) {
      if (lex_less(e.normalized, rep.entries[rep.argmin].normalized)) rep.argmin = i;
    } else if (e.ratio < rep.ratio_min) {
      rep.ratio_min = e.ratio;
      rep.argmin = i;
    }
    if (same(e.ratio, rep.ratio_max)) {
      if (lex_less(e.normalized, rep.entries[rep.argmax].normalized)) rep.argmax = i;
    } else if (e.ratio > rep.ratio_max) {
      rep.ratio_max = e.ratio;
      rep.argmax = i;
    }
  }
  rep.ratio_min = rep.entries[rep.argmin].ratio;
  rep.ratio_max = rep.entries[rep.argmax].ratio;
  rep.lambda = rep.ratio_max / rep.ratio_min;
  return rep;
}

nlohmann::json DistortionReport::to_json() const {
  auto witness = [&](std::size_t i) {
    const auto& e = entries[i];
    return nlohmann::json{{"id", e.id}, {"vector", e.normalized.to_json()}, {"ratio", e.ratio.str()}};
  };
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : entries)
    rows.push_back({{"id", e.id},
                    {"base_norm", e.base_norm.str()},
                    {"derived_norm", e.derived_norm.str()},
                    {"ratio", e.ratio.str()}});
  return {{"space", space},
          {"derived", derived},
          {"corpus", corpus},
          {"block_basis", block_basis},
          {"exact", lambda.exact()},
          {"ratio_min", ratio_min.str()},
          {"ratio_max", ratio_max.str()},
          {"empirical_lambda", lambda.str()},
          {"witness_min", witness(argmin)},
          {"witness_max", witness(argmax)},
          {"entries", rows}};
}

std::string DistortionReport::to_csv() const {
  std::ostringstream os;
  os << "vector_id,base_norm,derived_norm,ratio\n";
  for (const auto& e : entries) {
    std::string id = e.id;
    if (id.find_first_of(",\"") != std::string::npos) {
      std::string q = "\"";
      for (char c : id) q += c == '"' ? std::string("\"\"") : std::string(1, c);
      id = q + "\"";
    }
    os << id << ',' << e.base_norm.str() << ',' << e.derived_norm.str() << ',' << e.ratio.str() << '\n';
  }
  return os.str();
}

}  // namespace dlab
