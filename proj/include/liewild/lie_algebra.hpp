#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liewild/subspace.hpp"

namespace liewild {

/// Sparse bracket table: [e_i, e_j] = sum_k c_k e_k, stored for i < j only.
/// Antisymmetry fills in the other orientation, and [e_i, e_i] = 0.
struct StructureConstants {
  using Terms = std::vector<std::pair<std::size_t, Rat>>;

  std::size_t dim = 0;
  std::vector<std::string> basis_names;
  std::map<std::pair<std::size_t, std::size_t>, Terms> table;

  StructureConstants() = default;
  explicit StructureConstants(std::size_t n);
  StructureConstants(std::size_t n, std::vector<std::string> names);

  /// Records [e_i, e_j] = terms. A (j, i) entry with j > i is stored negated
  /// at (i, j). Zero terms are dropped; i == j with nonzero terms, indices
  /// out of range, or duplicate entries are rejected.
  void set(std::size_t i, std::size_t j, Terms terms);

  bool operator==(const StructureConstants&) const = default;
};

/// A validated Lie algebra: the table passed the Jacobi check.
class LieAlgebra {
 public:
  /// Throws JacobiViolation on the first failing basis triple,
  /// IndexOutOfRange on a malformed table.
  static LieAlgebra validate(StructureConstants sc);

  std::size_t dim() const { return sc_.dim; }
  const StructureConstants& sc() const { return sc_; }
  const std::string& name_of(std::size_t i) const { return sc_.basis_names[i]; }

  Vec bracket_basis(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Matrix of ad x:  (ad x) e_j = [x, e_j], columns indexed by j.
  Matrix ad(const Vec& x) const;

  Subspace whole() const { return Subspace::full(dim()); }

 private:
  explicit LieAlgebra(StructureConstants sc) : sc_(std::move(sc)) {}
  StructureConstants sc_;
};

/// Gram matrix of the Killing form kappa(x, y) = tr(ad x . ad y) on the basis.
Matrix killing_form(const LieAlgebra& l);

bool is_subalgebra(const LieAlgebra& l, const Subspace& v);
bool is_ideal(const LieAlgebra& l, const Subspace& v);

/// Span of all brackets of basis pairs of v. Throws NotASubalgebra when v is
/// not closed under the bracket.
Subspace derived_subalgebra(const LieAlgebra& l, const Subspace& v);

/// True iff the derived series of v terminates at zero.
bool is_solvable(const LieAlgebra& l, const Subspace& v);

/// The radical, by the characteristic-zero Cartan criterion:
/// R = { x : kappa(x, [L, L]) = 0 }.
Subspace radical(const LieAlgebra& l);

/// Joint kernel of all ad e_i.
Subspace center(const LieAlgebra& l);

/// Splits a semisimple algebra into its simple ideals via the centroid.
/// Throws NotSemisimple when radical(l) != 0, and NonSplit when a required
/// splitting would need an irrational eigenvalue.
std::vector<Subspace> simple_ideal_decomposition(const LieAlgebra& l);

/// Representation of a Levi complement on R/[R, R].
struct ModuleAction {
  std::size_t rep_dim = 0;
  Matrix quotient_reps;          // rep_dim x n rows: lifted quotient basis
  std::vector<Matrix> matrices;  // one rep_dim x rep_dim matrix per levi basis row
  bool is_zero() const;
};

/// Action of the levi basis rows on R/[R, R] in the deterministic quotient
/// basis (rref basis of [R, R] completed inside R). Throws NotComplementary.
ModuleAction quotient_module_action(const LieAlgebra& l, const Subspace& levi,
                                    const Subspace& rad);

/// Same algebra in the basis f_i = sum_j p[i][j] e_j; p must be invertible.
LieAlgebra change_basis(const LieAlgebra& l, const Matrix& p);

/// Pushes a subspace through the same base change: coordinates w.r.t. f.
Subspace change_basis(const Subspace& s, const Matrix& p_inverse);

/// A subalgebra viewed as an algebra in its own right.
struct RestrictedAlgebra {
  LieAlgebra algebra;
  Matrix embedding;  // rows: basis of the subalgebra in ambient coordinates
  Vec to_ambient(const Vec& local) const;
  Subspace to_ambient(const Subspace& local) const;
};
RestrictedAlgebra restrict_to_subalgebra(const LieAlgebra& l, const Subspace& v);

/// Quotient by an ideal, with a deterministic section.
struct QuotientAlgebra {
  LieAlgebra algebra;
  Subspace ideal;
  Matrix section;        // q x n rows: lifts of the quotient basis vectors
  Matrix basis_inverse;  // solves c . [ideal basis; section] = v as c = basis_inverse . v
  Vec project(const Vec& ambient) const;
};
QuotientAlgebra quotient_by_ideal(const LieAlgebra& l, const Subspace& ideal);

}  // namespace liewild
