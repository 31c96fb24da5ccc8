#pragma once

#include <vector>

#include "liewild/matrix.hpp"

namespace liewild {

/// Subspace of Q^n in canonical form: the basis matrix is the reduced row
/// echelon form of any spanning set, rows are the basis vectors. Canonical
/// form makes subspace equality a plain data comparison.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const Matrix& vectors);
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in this basis; nullopt when v is outside the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  bool operator==(const Subspace& rhs) const = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;  // dim x ambient, rref, no zero rows
};

Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace subspace_intersect(const Subspace& u, const Subspace& w);
bool subspace_contains(const Subspace& u, const Subspace& w);

/// Standard basis vectors extending `s` to the full ambient space,
/// chosen deterministically by scanning e_0, e_1, ... in order.
std::vector<Vec> completion_vectors(const Subspace& s);

}  // namespace liewild
