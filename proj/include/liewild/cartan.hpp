#pragma once

#include <string>
#include <vector>

#include "liewild/errors.hpp"
#include "liewild/rational.hpp"

namespace liewild::rep {

/// Weight in fundamental-weight coordinates, concatenated across the simple
/// factors of a CartanDatum.
using Weight = std::vector<int>;

enum class SimpleType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// One simple factor, realized by its Cartan matrix. Convention:
/// cartan[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i),
/// so the fundamental coordinates of alpha_j are column j of the matrix.
/// The inner product is normalized so long roots have norm 2.
class SimpleFactor {
 public:
  SimpleFactor(SimpleType type, int rank);

  SimpleType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<Rat>& symmetrizer() const { return sym_; }

  /// Positive roots in simple-root coordinates, sorted by height then lex.
  const std::vector<std::vector<int>>& positive_roots() const { return pos_roots_; }

  /// Fundamental coordinates of a simple root: column i of the Cartan matrix.
  std::vector<int> simple_root_fundamental(int i) const;

  /// (mu, alpha) for mu in fundamental coordinates, alpha in root coordinates.
  Rat pair_with_root(const Weight& mu, const std::vector<int>& alpha) const;

  /// (mu, nu) for weights in fundamental coordinates.
  Rat pair(const Weight& mu, const Weight& nu) const;

  /// Simple reflection s_i in fundamental coordinates.
  Weight reflect(const Weight& w, int i) const;

  bool operator==(const SimpleFactor& o) const { return type_ == o.type_ && rank_ == o.rank_; }

 private:
  SimpleType type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rat> sym_;                       // d_i = (alpha_i, alpha_i)/2
  std::vector<std::vector<int>> pos_roots_;    // simple-root coordinates
  std::vector<std::vector<Rat>> weight_form_;  // (omega_i, omega_j)
};

/// Semisimple type: an ordered product of simple factors.
class CartanDatum {
 public:
  CartanDatum() = default;
  explicit CartanDatum(std::vector<SimpleFactor> factors);

  /// Parses "A1", "B2", "A2xA1", ...
  static CartanDatum parse(const std::string& text);

  const std::vector<SimpleFactor>& factors() const { return factors_; }
  std::size_t total_rank() const { return total_rank_; }
  std::string name() const;

  /// Slice of a concatenated weight belonging to factor f.
  Weight slice(const Weight& w, std::size_t f) const;
  std::size_t offset(std::size_t f) const { return offsets_[f]; }

  bool operator==(const CartanDatum& o) const { return factors_ == o.factors_; }

 private:
  std::vector<SimpleFactor> factors_;
  std::vector<std::size_t> offsets_;
  std::size_t total_rank_ = 0;
};

}  // namespace liewild::rep
