#include "liewild/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace liewild::quiver {

namespace {

long total_components(const ModuleDesc& m) {
  long t = 0;
  for (const auto& [w, k] : m) t += k;
  return t;
}

// Dominant weights with every coordinate <= window, ordered by coordinate sum
// then lexicographically.
std::vector<Weight> window_weights(const CartanDatum& d, int window) {
  std::vector<Weight> out{Weight(d.total_rank(), 0)};
  for (std::size_t pos = 0; pos < d.total_rank(); ++pos) {
    std::vector<Weight> next;
    for (const Weight& w : out)
      for (int c = 0; c <= window; ++c) {
        Weight v = w;
        v[pos] = c;
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
    const int sa = std::accumulate(a.begin(), a.end(), 0);
    const int sb = std::accumulate(b.begin(), b.end(), 0);
    if (sa != sb) return sa < sb;
    return a < b;
  });
  return out;
}

}  // namespace

QuiverWindow build_quiver(const CartanDatum& d, const ModuleDesc& i,
                          std::vector<IrrLabel> seeds, int depth) {
  if (depth < 0) throw DimensionMismatch("build_quiver: negative depth");
  for (const auto& [w, k] : i)
    if (!rep::is_dominant(w) || k <= 0) throw NonDominant("build_quiver: bad module description");

  QuiverWindow q;
  q.datum = d;
  q.module = i;

  std::map<Weight, std::size_t> index;
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  std::vector<Weight> layer;
  for (const Weight& s : seeds) {
    if (!rep::is_dominant(s)) throw NonDominant("build_quiver: seed is not dominant");
    if (s.size() != d.total_rank()) throw DimensionMismatch("build_quiver: seed rank mismatch");
    index[s] = q.vertices.size();
    q.vertices.push_back(s);
    layer.push_back(s);
  }
  for (int lvl = 0; lvl < depth && !layer.empty(); ++lvl) {
    std::vector<Weight> fresh;
    for (const Weight& v : layer)
      for (const auto& [w, mult] : rep::tensor_module(d, i, v))
        if (!index.count(w) &&
            std::find(fresh.begin(), fresh.end(), w) == fresh.end())
          fresh.push_back(w);
    std::sort(fresh.begin(), fresh.end());
    for (const Weight& w : fresh) {
      index[w] = q.vertices.size();
      q.vertices.push_back(w);
      if (lvl + 1 == depth) q.boundary.insert(index[w]);
    }
    layer = std::move(fresh);
  }
  if (depth == 0)
    for (std::size_t v = 0; v < q.vertices.size(); ++v) q.boundary.insert(v);

  // Arrows for every vertex; targets outside the window are dropped, which can
  // only happen for boundary sources.
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    for (const auto& [w, mult] : rep::tensor_module(d, i, q.vertices[v])) {
      auto it = index.find(w);
      if (it == index.end()) {
        if (!q.boundary.count(v))
          throw InternalError("build_quiver: non-boundary arrow escapes the window");
        continue;
      }
      q.arrows[{v, it->second}] = mult;
    }

  // Degree-2 relation counts for non-boundary sources.
  const ModuleDesc wedge = rep::alt_sym_square(d, i).alt;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    if (q.boundary.count(v)) continue;
    for (const auto& [w, count] : rep::tensor_module(d, wedge, q.vertices[v])) {
      auto it = index.find(w);
      if (it == index.end()) continue;  // truncated with the window
      q.relations[it->second].emplace_back(v, count);
    }
  }
  for (auto& [tgt, list] : q.relations) std::sort(list.begin(), list.end());
  return q;
}

std::string wild_rule_name(WildRule rule) {
  switch (rule) {
    case WildRule::FiveComponents: return "five_components";
    case WildRule::MultiplicityThree: return "multiplicity_three";
    case WildRule::TwoPlusOne: return "two_plus_one";
    case WildRule::LargeModule: return "large_module";
    case WildRule::BigRadicalDim: return "module_dimension_at_least_three";
    case WildRule::DecomposableTwoDim: return "decomposable_two_dimensional";
  }
  return "unknown";
}

std::optional<WildWitness> detect_wild(const CartanDatum& d, const ModuleDesc& i,
                                       int window) {
  DetectOptions opts;
  opts.window = window;
  return detect_wild(d, i, opts);
}

std::optional<WildWitness> detect_wild(const CartanDatum& d, const ModuleDesc& i,
                                       const DetectOptions& opts) {
  if (opts.window < 1) throw DimensionMismatch("detect_wild: window must be >= 1");
  for (const auto& [w, k] : i)
    if (!rep::is_dominant(w) || k <= 0) throw NonDominant("detect_wild: bad module description");

  const Int dim = rep::module_dim(d, i);
  const Weight top = i.empty() ? Weight(d.total_rank(), 0) : i.rbegin()->first;
  if (opts.enable_big_radical_dim && dim >= 3)
    return WildWitness{WildRule::BigRadicalDim, top,
                       "dim I = " + dim.get_str() + " >= 3"};
  if (dim == 2 && total_components(i) == 2)
    return WildWitness{WildRule::DecomposableTwoDim, top,
                       "I splits into two one-dimensional summands"};

  const std::vector<Weight> scan = window_weights(d, opts.window);
  std::map<Weight, ModuleDesc> decomp;
  for (const Weight& m : scan) decomp[m] = rep::tensor_module(d, i, m);

  for (const Weight& m : scan) {
    const ModuleDesc& dm = decomp[m];
    long max_mult = 0;
    for (const auto& [w, k] : dm) max_mult = std::max(max_mult, k);
    if (dm.size() >= 5) {
      std::string detail = "I (x) " + rep::weight_str(d, m) + " has " +
                           std::to_string(dm.size()) + " distinct components";
      return WildWitness{WildRule::FiveComponents, m, detail};
    }
    if (max_mult >= 3)
      return WildWitness{WildRule::MultiplicityThree, m,
                         "a component of I (x) " + rep::weight_str(d, m) +
                             " has multiplicity " + std::to_string(max_mult)};
    if (max_mult >= 2 && dm.size() >= 2)
      return WildWitness{WildRule::TwoPlusOne, m,
                         "I (x) " + rep::weight_str(d, m) +
                             " has a multiplicity-2 component and another component"};
    if (total_components(dm) >= 3) {
      for (const Weight& n : scan) {
        if (n == m) continue;
        for (const auto& [w, k] : dm)
          if (decomp[n].count(w))
            return WildWitness{WildRule::LargeModule, m,
                               "large module: component " + rep::weight_str(d, w) +
                                   " of I (x) " + rep::weight_str(d, m) +
                                   " also occurs in I (x) " + rep::weight_str(d, n)};
      }
    }
  }
  return std::nullopt;
}

bool verify_witness(const CartanDatum& d, const ModuleDesc& i, const WildWitness& w) {
  switch (w.rule) {
    case WildRule::BigRadicalDim:
      return rep::module_dim(d, i) >= 3;
    case WildRule::DecomposableTwoDim:
      return rep::module_dim(d, i) == 2 && total_components(i) == 2;
    case WildRule::FiveComponents:
      return rep::tensor_module(d, i, w.at_vertex).size() >= 5;
    case WildRule::MultiplicityThree: {
      for (const auto& [c, k] : rep::tensor_module(d, i, w.at_vertex))
        if (k >= 3) return true;
      return false;
    }
    case WildRule::TwoPlusOne: {
      const ModuleDesc dm = rep::tensor_module(d, i, w.at_vertex);
      long max_mult = 0;
      for (const auto& [c, k] : dm) max_mult = std::max(max_mult, k);
      return max_mult >= 2 && dm.size() >= 2;
    }
    case WildRule::LargeModule: {
      const ModuleDesc dm = rep::tensor_module(d, i, w.at_vertex);
      if (total_components(dm) < 3) return false;
      // Some other vertex shares a component; rescan the default window.
      for (const Weight& n : window_weights(d, 8)) {
        if (n == w.at_vertex) continue;
        for (const auto& [c, k] : rep::tensor_module(d, i, n))
          if (dm.count(c)) return true;
      }
      return false;
    }
  }
  return false;
}

std::string emit_dot(const QuiverWindow& q) {
  std::ostringstream os;
  os << "digraph K_I {\n";
  os << "  rankdir=LR;\n";
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    os << "  n" << v << " [label=\"" << rep::weight_str(q.datum, q.vertices[v]);
    auto rel = q.relations.find(v);
    if (rel != q.relations.end() && !rel->second.empty()) {
      os << "\\nrel";
      for (std::size_t k = 0; k < rel->second.size(); ++k) {
        os << (k ? ", " : " ");
        os << rep::weight_str(q.datum, q.vertices[rel->second[k].first]) << ":"
           << rel->second[k].second;
      }
    }
    os << "\"";
    if (q.boundary.count(v)) os << ", style=dashed";
    os << "];\n";
  }
  for (const auto& [key, mult] : q.arrows)
    os << "  n" << key.first << " -> n" << key.second << " [label=\"" << mult << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace liewild::quiver
