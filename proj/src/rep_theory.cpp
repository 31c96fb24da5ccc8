#include "liewild/rep_theory.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>

namespace liewild::rep {

namespace {

void check_label(const CartanDatum& d, const Weight& w) {
  if (w.size() != d.total_rank())
    throw DimensionMismatch("weight length does not match the Cartan datum rank");
  if (!is_dominant(w)) throw NonDominant("weight is not dominant");
}

Rat factor_dim(const SimpleFactor& f, const Weight& hw) {
  Weight shifted(hw.size());
  for (std::size_t i = 0; i < hw.size(); ++i) shifted[i] = hw[i] + 1;
  const Weight rho(hw.size(), 1);
  Rat dim(1);
  for (const auto& alpha : f.positive_roots())
    dim *= f.pair_with_root(shifted, alpha) / f.pair_with_root(rho, alpha);
  return dim;
}

// Weight system of one irreducible factor module, Freudenthal recursion.
std::map<Weight, long> factor_weight_system(const SimpleFactor& f, const Weight& hw) {
  const int n = f.rank();
  // Weight set, layer by layer: nu - alpha_i is a weight iff the ascent length
  // p of the alpha_i-string through nu satisfies p + <nu, alpha_i^vee> >= 1.
  std::map<Weight, int> height_of{{hw, 0}};
  std::vector<std::vector<Weight>> layers{{hw}};
  while (!layers.back().empty()) {
    std::vector<Weight> next;
    for (const Weight& nu : layers.back())
      for (int i = 0; i < n; ++i) {
        const std::vector<int> alpha = f.simple_root_fundamental(i);
        int p = 0;
        Weight up = nu;
        while (true) {
          for (int k = 0; k < n; ++k) up[k] += alpha[k];
          if (!height_of.count(up)) break;
          ++p;
        }
        if (p + nu[i] < 1) continue;
        Weight down = nu;
        for (int k = 0; k < n; ++k) down[k] -= alpha[k];
        if (!height_of.count(down)) {
          height_of[down] = static_cast<int>(layers.size());
          next.push_back(down);
        }
      }
    std::sort(next.begin(), next.end());
    layers.push_back(std::move(next));
  }

  const Weight rho(static_cast<std::size_t>(n), 1);
  Weight top_sh = hw;
  for (int k = 0; k < n; ++k) top_sh[k] += 1;
  const Rat top_norm = f.pair(top_sh, top_sh);

  // Fundamental coordinates of every positive root, computed once.
  std::vector<std::vector<int>> roots_fund;
  for (const auto& alpha : f.positive_roots()) {
    std::vector<int> af(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) af[k] += alpha[i] * f.cartan()[k][i];
    roots_fund.push_back(std::move(af));
  }

  std::map<Weight, long> mult{{hw, 1}};
  for (std::size_t h = 1; h < layers.size(); ++h)
    for (const Weight& mu : layers[h]) {
      Rat num(0);
      for (std::size_t r = 0; r < roots_fund.size(); ++r) {
        const auto& alpha = f.positive_roots()[r];
        const auto& alpha_fund = roots_fund[r];
        Weight xi = mu;
        while (true) {
          for (int k = 0; k < n; ++k) xi[k] += alpha_fund[k];
          auto it = mult.find(xi);
          if (it == mult.end()) break;
          num += Rat(it->second) * f.pair_with_root(xi, alpha);
        }
      }
      Weight mu_sh = mu;
      for (int k = 0; k < n; ++k) mu_sh[k] += 1;
      const Rat denom = top_norm - f.pair(mu_sh, mu_sh);
      if (denom == 0) throw InternalError("Freudenthal: vanishing denominator");
      Rat m = 2 * num / denom;
      if (m.get_den() != 1 || m <= 0) throw InternalError("Freudenthal: non-integral multiplicity");
      mult[mu] = m.get_num().get_si();
    }
  return mult;
}

std::map<Weight, long> factor_weight_system_cached(const SimpleFactor& f, const Weight& hw) {
  static std::map<std::pair<std::string, Weight>, std::map<Weight, long>> cache;
  static std::mutex mu;
  const auto key = std::make_pair(f.name(), hw);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto result = factor_weight_system(f, hw);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(result)).first->second;
}

// Reflect t to the dominant chamber tracking the sign; nullopt when singular.
std::optional<std::pair<Weight, int>> dominant_strict(const SimpleFactor& f, Weight t) {
  const int n = f.rank();
  int sign = 1;
  for (std::size_t guard = 0;; ++guard) {
    if (guard > 1u << 22) throw InternalError("dominant_strict: reflection loop diverged");
    int neg = -1;
    for (int i = 0; i < n; ++i)
      if (t[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    t = f.reflect(t, neg);
    sign = -sign;
  }
  for (int i = 0; i < n; ++i)
    if (t[i] == 0) return std::nullopt;
  return std::make_pair(t, sign);
}

std::map<Weight, long> factor_tensor(const SimpleFactor& f, Weight a, Weight b) {
  if (factor_dim(f, a) > factor_dim(f, b)) std::swap(a, b);
  const auto wt = factor_weight_system_cached(f, a);
  const int n = f.rank();
  std::map<Weight, long> out;
  for (const auto& [nu, m] : wt) {
    Weight t(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) t[k] = nu[k] + b[k] + 1;  // nu + b + rho
    auto dom = dominant_strict(f, t);
    if (!dom) continue;
    Weight res = dom->first;
    for (int k = 0; k < n; ++k) res[k] -= 1;
    out[res] += dom->second * m;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0)
      it = out.erase(it);
    else if (it->second < 0)
      throw InternalError("Klimyk: negative multiplicity");
    else
      ++it;
  }
  return out;
}

Rat rho_score(const CartanDatum& d, const Weight& w) {
  Rat s(0);
  for (std::size_t f = 0; f < d.factors().size(); ++f) {
    const Weight wf = d.slice(w, f);
    const Weight rho(wf.size(), 1);
    s += d.factors()[f].pair(wf, rho);
  }
  return s;
}

}  // namespace

bool is_dominant(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](int c) { return c >= 0; });
}

std::string weight_str(const CartanDatum& d, const Weight& w) {
  std::string s = "(";
  for (std::size_t f = 0; f < d.factors().size(); ++f) {
    if (f) s += ";";
    const Weight wf = d.slice(w, f);
    for (std::size_t i = 0; i < wf.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(wf[i]);
    }
  }
  return s + ")";
}

Int weyl_dim(const CartanDatum& d, const IrrLabel& hw) {
  check_label(d, hw);
  Rat dim(1);
  for (std::size_t f = 0; f < d.factors().size(); ++f)
    dim *= factor_dim(d.factors()[f], d.slice(hw, f));
  if (dim.get_den() != 1) throw InternalError("weyl_dim: non-integral result");
  return dim.get_num();
}

std::map<Weight, long> weight_multiplicities(const CartanDatum& d, const IrrLabel& hw) {
  check_label(d, hw);
  std::map<Weight, long> acc{{Weight{}, 1}};
  for (std::size_t f = 0; f < d.factors().size(); ++f) {
    const auto part = factor_weight_system_cached(d.factors()[f], d.slice(hw, f));
    std::map<Weight, long> next;
    for (const auto& [prefix, m] : acc)
      for (const auto& [wf, mf] : part) {
        Weight w = prefix;
        w.insert(w.end(), wf.begin(), wf.end());
        next[w] = m * mf;
      }
    acc = std::move(next);
  }
  return acc;
}

ModuleDesc tensor_decompose(const CartanDatum& d, const IrrLabel& a, const IrrLabel& b) {
  check_label(d, a);
  check_label(d, b);
  ModuleDesc acc{{Weight{}, 1}};
  for (std::size_t f = 0; f < d.factors().size(); ++f) {
    const auto part = factor_tensor(d.factors()[f], d.slice(a, f), d.slice(b, f));
    ModuleDesc next;
    for (const auto& [prefix, m] : acc)
      for (const auto& [wf, mf] : part) {
        Weight w = prefix;
        w.insert(w.end(), wf.begin(), wf.end());
        next[w] = m * mf;
      }
    acc = std::move(next);
  }
  return acc;
}

ModuleDesc tensor_module(const CartanDatum& d, const ModuleDesc& i, const IrrLabel& m) {
  ModuleDesc out;
  for (const auto& [comp, mult] : i)
    for (const auto& [w, k] : tensor_decompose(d, comp, m)) out[w] += mult * k;
  return out;
}

Int module_dim(const CartanDatum& d, const ModuleDesc& m) {
  Int dim(0);
  for (const auto& [w, mult] : m) dim += Int(mult) * weyl_dim(d, w);
  return dim;
}

SquareParts alt_sym_square(const CartanDatum& d, const ModuleDesc& m) {
  // Flat weight list of the module, one entry per basis slot.
  std::vector<Weight> slots;
  for (const auto& [comp, mult] : m) {
    const auto wt = weight_multiplicities(d, comp);
    for (long c = 0; c < mult; ++c)
      for (const auto& [w, k] : wt)
        for (long t = 0; t < k; ++t) slots.push_back(w);
  }
  std::map<Weight, long> alt_char, sym_char;
  for (std::size_t a = 0; a < slots.size(); ++a)
    for (std::size_t b = a; b < slots.size(); ++b) {
      Weight sum(slots[a].size());
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = slots[a][k] + slots[b][k];
      sym_char[sum] += 1;
      if (a != b) alt_char[sum] += 1;
    }
  SquareParts parts;
  parts.alt = peel_character(d, std::move(alt_char));
  parts.sym = peel_character(d, std::move(sym_char));
  return parts;
}

ModuleDesc peel_character(const CartanDatum& d, std::map<Weight, long> character) {
  for (auto it = character.begin(); it != character.end();)
    it = it->second == 0 ? character.erase(it) : std::next(it);
  ModuleDesc out;
  while (!character.empty()) {
    // Highest remaining weight: maximal pairing with rho, lex max to break ties.
    auto best = character.begin();
    Rat best_score = rho_score(d, best->first);
    for (auto it = std::next(character.begin()); it != character.end(); ++it) {
      const Rat s = rho_score(d, it->first);
      if (s > best_score || (s == best_score && it->first > best->first)) {
        best = it;
        best_score = s;
      }
    }
    const Weight top = best->first;
    const long count = best->second;
    if (!is_dominant(top) || count < 0)
      throw InternalError("peel_character: input is not a genuine character");
    for (const auto& [w, k] : weight_multiplicities(d, top)) {
      auto it = character.find(w);
      if (it == character.end() || it->second < count * k)
        throw InternalError("peel_character: input is not a genuine character");
      it->second -= count * k;
      if (it->second == 0) character.erase(it);
    }
    out[top] += count;
  }
  return out;
}

Weight reflect_simple(const CartanDatum& d, const Weight& w, std::size_t f, int i) {
  Weight part = d.factors()[f].reflect(d.slice(w, f), i);
  Weight out = w;
  std::copy(part.begin(), part.end(), out.begin() + static_cast<long>(d.offset(f)));
  return out;
}

}  // namespace liewild::rep
