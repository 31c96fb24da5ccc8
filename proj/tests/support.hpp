#pragma once

#include <random>
#include <vector>

#include "liewild/lie_algebra.hpp"
#include "liewild/rep_theory.hpp"

namespace liewild::testsupport {

/// Deterministic RNG for reproducible property tests.
inline std::mt19937& rng() {
  static std::mt19937 gen(20240811);
  return gen;
}

inline Rat random_rat(int num_bound = 5, int den_bound = 3) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  return rat(num(rng()), den(rng()));
}

inline Matrix random_matrix(std::size_t rows, std::size_t cols, int bound = 4) {
  Matrix m(rows, cols);
  std::uniform_int_distribution<int> pick(-bound, bound);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = pick(rng());
  return m;
}

inline Matrix random_invertible(std::size_t n, int bound = 2) {
  while (true) {
    Matrix m = random_matrix(n, n, bound);
    if (rank(m) == n) return m;
  }
}

inline Vec random_vec(std::size_t n, int bound = 4) {
  Vec v(n);
  std::uniform_int_distribution<int> pick(-bound, bound);
  for (auto& x : v) x = pick(rng());
  return v;
}

/// The standard sl2 table in basis (e, h, f).
inline LieAlgebra sl2() {
  StructureConstants sc(3, {"e", "h", "f"});
  sc.set(1, 0, {{0, Rat(2)}});
  sc.set(1, 2, {{2, Rat(-2)}});
  sc.set(0, 2, {{1, Rat(1)}});
  return LieAlgebra::validate(std::move(sc));
}

/// Independent tensor-product oracle: multiply the weight multisets of the two
/// factors, then peel the product character greedily by highest weight. Checks
/// the Klimyk route in tensor_decompose without sharing it.
inline rep::ModuleDesc oracle_tensor(const rep::CartanDatum& d, const rep::Weight& a,
                                     const rep::Weight& b) {
  const auto wa = rep::weight_multiplicities(d, a);
  const auto wb = rep::weight_multiplicities(d, b);
  std::map<rep::Weight, long> product;
  for (const auto& [u, mu] : wa)
    for (const auto& [v, mv] : wb) {
      rep::Weight s(u.size());
      for (std::size_t k = 0; k < s.size(); ++k) s[k] = u[k] + v[k];
      product[s] += mu * mv;
    }
  return rep::peel_character(d, std::move(product));
}

/// Random dominant weight with coordinates below the bound.
inline rep::Weight random_dominant(std::size_t rank, int bound) {
  std::uniform_int_distribution<int> pick(0, bound);
  rep::Weight w(rank);
  for (auto& c : w) c = pick(rng());
  return w;
}

}  // namespace liewild::testsupport
