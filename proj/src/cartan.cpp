#include "liewild/cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "liewild/matrix.hpp"

namespace liewild::rep {

namespace {

std::vector<std::vector<int>> cartan_matrix(SimpleType type, int rank) {
  auto chain = [](int n) {
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
    return a;
  };
  switch (type) {
    case SimpleType::A:
      if (rank < 1) throw BadRecipe("type A needs rank >= 1");
      return chain(rank);
    case SimpleType::B: {
      if (rank < 2) throw BadRecipe("type B needs rank >= 2");
      auto a = chain(rank);
      a[rank - 1][rank - 2] = -2;  // alpha_{rank-1} is short
      return a;
    }
    case SimpleType::C: {
      if (rank < 2) throw BadRecipe("type C needs rank >= 2");
      auto a = chain(rank);
      a[rank - 2][rank - 1] = -2;  // alpha_{rank-1} is long
      return a;
    }
    case SimpleType::D: {
      if (rank < 4) throw BadRecipe("type D needs rank >= 4");
      auto a = chain(rank);
      a[rank - 1][rank - 2] = a[rank - 2][rank - 1] = 0;
      a[rank - 1][rank - 3] = a[rank - 3][rank - 1] = -1;
      return a;
    }
    case SimpleType::G: {
      if (rank != 2) throw BadRecipe("type G needs rank 2");
      return {{2, -1}, {-3, 2}};
    }
    case SimpleType::F: {
      if (rank != 4) throw BadRecipe("type F needs rank 4");
      return {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
    }
    case SimpleType::E: {
      if (rank < 6 || rank > 8) throw BadRecipe("type E needs rank 6, 7 or 8");
      std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
      for (int i = 0; i < rank; ++i) a[i][i] = 2;
      auto bond = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < rank; ++i) bond(i, i + 1);
      return a;
    }
  }
  throw BadRecipe("unknown simple type");
}

std::vector<Rat> symmetrize(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rat> d(n, Rat(0));
  d[0] = 1;
  // Propagate over bonds; the Dynkin diagram of a simple type is connected.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0 || d[i] == 0 || d[j] != 0) continue;
        d[j] = d[i] * Rat(a[i][j]) / Rat(a[j][i]);
        changed = true;
      }
  }
  Rat top(0);
  for (const Rat& x : d) {
    if (x == 0) throw InternalError("symmetrizer: diagram not connected");
    top = std::max(top, x);
  }
  for (Rat& x : d) x /= top;  // long roots get (alpha, alpha) = 2
  return d;
}

int height(const std::vector<int>& root) {
  return std::accumulate(root.begin(), root.end(), 0);
}

std::vector<std::vector<int>> generate_positive_roots(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer)
      for (int i = 0; i < n; ++i) {
        if (height(beta) == 1 && beta[i] == 1) continue;  // beta == alpha_i
        // p = longest descent beta - k alpha_i inside the root set
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !roots.count(down)) break;
          ++p;
        }
        int pairing = 0;  // <beta, alpha_i^vee>
        for (int j = 0; j < n; ++j) pairing += a[i][j] * beta[j];
        if (p - pairing >= 1) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (!roots.count(up)) next.insert(up);
        }
      }
    layer.assign(next.begin(), next.end());
    roots.insert(next.begin(), next.end());
  }
  std::vector<std::vector<int>> out(roots.begin(), roots.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (height(x) != height(y)) return height(x) < height(y);
    return x < y;
  });
  return out;
}

}  // namespace

SimpleFactor::SimpleFactor(SimpleType type, int rank)
    : type_(type), rank_(rank), cartan_(cartan_matrix(type, rank)) {
  sym_ = symmetrize(cartan_);
  pos_roots_ = generate_positive_roots(cartan_);
  // (omega_i, omega_j): with G = diag(d) . cartan and omega in root coordinates
  // given by columns of cartan^{-1}, the Gram matrix is cartan^{-T} G cartan^{-1}.
  const int n = rank_;
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = cartan_[i][j];
  auto inv = inverse(a);
  if (!inv) throw InternalError("Cartan matrix not invertible");
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = sym_[i] * Rat(cartan_[i][j]);
  const Matrix f = inv->transpose() * g * *inv;
  weight_form_.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) weight_form_[i][j] = f.at(i, j);
}

std::string SimpleFactor::name() const {
  return std::string(1, static_cast<char>(type_)) + std::to_string(rank_);
}

std::vector<int> SimpleFactor::simple_root_fundamental(int i) const {
  std::vector<int> v(rank_);
  for (int k = 0; k < rank_; ++k) v[k] = cartan_[k][i];
  return v;
}

Rat SimpleFactor::pair_with_root(const Weight& mu, const std::vector<int>& alpha) const {
  Rat r(0);
  for (int i = 0; i < rank_; ++i)
    if (alpha[i] != 0) r += Rat(alpha[i]) * sym_[i] * Rat(mu[i]);
  return r;
}

Rat SimpleFactor::pair(const Weight& mu, const Weight& nu) const {
  Rat r(0);
  for (int i = 0; i < rank_; ++i) {
    if (mu[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (nu[j] != 0) r += Rat(mu[i]) * weight_form_[i][j] * Rat(nu[j]);
  }
  return r;
}

Weight SimpleFactor::reflect(const Weight& w, int i) const {
  Weight r = w;
  const int c = w[i];
  if (c == 0) return r;
  for (int k = 0; k < rank_; ++k) r[k] -= c * cartan_[k][i];
  return r;
}

CartanDatum::CartanDatum(std::vector<SimpleFactor> factors) : factors_(std::move(factors)) {
  offsets_.clear();
  std::size_t off = 0;
  for (const auto& f : factors_) {
    offsets_.push_back(off);
    off += static_cast<std::size_t>(f.rank());
  }
  total_rank_ = off;
}

CartanDatum CartanDatum::parse(const std::string& text) {
  std::vector<SimpleFactor> factors;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char t = text[pos];
    const std::string valid = "ABCDEFG";
    if (valid.find(t) == std::string::npos)
      throw BadRecipe("bad Cartan type '" + text + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw BadRecipe("missing rank in Cartan type '" + text + "'");
    const int rank = std::stoi(text.substr(start, pos - start));
    factors.emplace_back(static_cast<SimpleType>(t), rank);
    if (pos < text.size()) {
      if (text[pos] != 'x') throw BadRecipe("expected 'x' between factors in '" + text + "'");
      ++pos;
      if (pos == text.size()) throw BadRecipe("trailing 'x' in Cartan type '" + text + "'");
    }
  }
  if (factors.empty()) throw BadRecipe("empty Cartan type");
  return CartanDatum(std::move(factors));
}

std::string CartanDatum::name() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "x";
    s += factors_[i].name();
  }
  return s;
}

Weight CartanDatum::slice(const Weight& w, std::size_t f) const {
  const std::size_t off = offsets_[f];
  const std::size_t r = static_cast<std::size_t>(factors_[f].rank());
  return Weight(w.begin() + static_cast<long>(off), w.begin() + static_cast<long>(off + r));
}

}  // namespace liewild::rep
