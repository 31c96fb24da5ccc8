#include "liewild/levi.hpp"

namespace liewild {

namespace {

// Levi subalgebra when the radical is abelian: correct the complement
// x_1..x_s by elements a_i of R so that the corrected span closes.
Subspace levi_abelian(const LieAlgebra& l, const Subspace& rad) {
  const std::size_t n = l.dim(), r = rad.dim(), s = n - r;
  const std::vector<Vec> complement = completion_vectors(rad);
  const Matrix full = vstack(rad.basis(), Matrix::from_rows(n, complement));
  const Matrix full_t = full.transpose();

  // Action of each complement vector on R, in R coordinates.
  std::vector<Matrix> act(s, Matrix(r, r));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t t = 0; t < r; ++t) {
      const Vec im = l.bracket(complement[i], rad.basis_vector(t));
      auto c = rad.coordinates(im);
      if (!c) throw NotAnIdeal("levi: radical is not an ideal");
      for (std::size_t m = 0; m < r; ++m) act[i].at(m, t) = (*c)[m];
    }

  // Split [x_i, x_j] into quotient structure constants gamma and R-part.
  std::vector<std::vector<Vec>> gamma(s, std::vector<Vec>(s));
  std::vector<std::vector<Vec>> rpart(s, std::vector<Vec>(s));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j) {
      auto c = solve(full_t, l.bracket(complement[i], complement[j]));
      if (!c) throw InternalError("levi: completed basis is singular");
      rpart[i][j] = Vec(c->begin(), c->begin() + static_cast<long>(r));
      gamma[i][j] = Vec(c->begin() + static_cast<long>(r), c->end());
    }

  // Unknowns u_i in Q^r with a_i = u_i . rad basis; one equation block per pair.
  const std::size_t pairs = s * (s - 1) / 2;
  Matrix sys(pairs * r, s * r);
  Vec rhs(pairs * r, Rat(0));
  std::size_t block = 0;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j, ++block)
      for (std::size_t m = 0; m < r; ++m) {
        const std::size_t row = block * r + m;
        for (std::size_t t = 0; t < r; ++t) {
          sys.at(row, j * r + t) += act[i].at(m, t);
          sys.at(row, i * r + t) -= act[j].at(m, t);
        }
        for (std::size_t k = 0; k < s; ++k)
          if (gamma[i][j][k] != 0) sys.at(row, k * r + m) -= gamma[i][j][k];
        rhs[row] = -rpart[i][j][m];
      }
  auto u = solve(sys, rhs);
  if (!u) throw InternalError("levi: correction system has no solution");

  std::vector<Vec> rows;
  for (std::size_t i = 0; i < s; ++i) {
    Vec v = complement[i];
    for (std::size_t t = 0; t < r; ++t)
      if ((*u)[i * r + t] != 0)
        v = vec_add(v, vec_scale((*u)[i * r + t], rad.basis_vector(t)));
    rows.push_back(std::move(v));
  }
  return Subspace::span(n, rows);
}

}  // namespace

Subspace levi_subalgebra(const LieAlgebra& l) {
  const Subspace rad = radical(l);
  if (rad.dim() == 0) return l.whole();
  if (rad.dim() == l.dim()) return Subspace::zero(l.dim());
  const Subspace square = derived_subalgebra(l, rad);
  if (square.dim() == 0) return levi_abelian(l, rad);

  // Nonabelian radical: find a Levi of l/[R,R], pull its preimage back,
  // and recurse inside that subalgebra (whose radical is [R,R]).
  const QuotientAlgebra q = quotient_by_ideal(l, square);
  const Subspace s_bar = levi_subalgebra(q.algebra);
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < s_bar.dim(); ++i) {
    const Vec c = s_bar.basis_vector(i);
    Vec v(l.dim(), Rat(0));
    for (std::size_t k = 0; k < q.section.rows(); ++k)
      if (c[k] != 0) v = vec_add(v, vec_scale(c[k], q.section.row(k)));
    gens.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < square.dim(); ++i) gens.push_back(square.basis_vector(i));
  const Subspace preimage = Subspace::span(l.dim(), gens);

  const RestrictedAlgebra sub = restrict_to_subalgebra(l, preimage);
  return sub.to_ambient(levi_subalgebra(sub.algebra));
}

bool is_direct_summand(const LieAlgebra& l, const Subspace& part, const Subspace& rest) {
  if (!is_subalgebra(l, part) || !is_subalgebra(l, rest) ||
      subspace_intersect(part, rest).dim() != 0 ||
      subspace_sum(part, rest).dim() != l.dim())
    throw NotComplementary("is_direct_summand: arguments are not complementary subalgebras");
  for (std::size_t a = 0; a < part.dim(); ++a)
    for (std::size_t b = 0; b < rest.dim(); ++b)
      if (!vec_is_zero(l.bracket(part.basis_vector(a), rest.basis_vector(b)))) return false;
  return true;
}

}  // namespace liewild
