#include "liewild/subspace.hpp"

namespace liewild {

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const Matrix& vectors) {
  if (vectors.rows() > 0 && vectors.cols() != ambient)
    throw DimensionMismatch("span: vector length != ambient dimension");
  const RrefResult r = rref(vectors);
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(r.rank, ambient);
  for (std::size_t i = 0; i < r.rank; ++i) s.basis_.set_row(i, r.reduced.row(i));
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  return span(ambient, Matrix::from_rows(ambient, vectors));
}

bool Subspace::contains(const Vec& v) const {
  return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("contains: ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("coordinates: length != ambient");
  return solve(basis_.transpose(), v);
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) throw DimensionMismatch("subspace_sum: ambient mismatch");
  return Subspace::span(u.ambient(), vstack(u.basis(), w.basis()));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) throw DimensionMismatch("subspace_intersect: ambient mismatch");
  const std::size_t n = u.ambient(), p = u.dim(), q = w.dim();
  if (p == 0 || q == 0) return Subspace::zero(n);
  // v in U cap W  <=>  v = a^T U = b^T W; kernel of [U^T | -W^T] yields (a, b).
  Matrix sys(n, p + q);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) sys.at(i, j) = u.basis().at(j, i);
    for (std::size_t j = 0; j < q; ++j) sys.at(i, p + j) = -w.basis().at(j, i);
  }
  std::vector<Vec> gens;
  for (const Vec& z : kernel_basis(sys)) {
    Vec v(n, Rat(0));
    for (std::size_t j = 0; j < p; ++j)
      if (z[j] != 0)
        for (std::size_t i = 0; i < n; ++i) v[i] += z[j] * u.basis().at(j, i);
    gens.push_back(std::move(v));
  }
  return Subspace::span(n, gens);
}

bool subspace_contains(const Subspace& u, const Subspace& w) { return u.contains(w); }

std::vector<Vec> completion_vectors(const Subspace& s) {
  std::vector<Vec> picked;
  Matrix work = s.basis();
  for (std::size_t i = 0; i < s.ambient() && work.rows() < s.ambient(); ++i) {
    Vec e(s.ambient(), Rat(0));
    e[i] = 1;
    Matrix cand = vstack(work, Matrix::from_rows(s.ambient(), {e}));
    if (rank(cand) == work.rows() + 1) {
      picked.push_back(e);
      work = cand;
    }
  }
  return picked;
}

}  // namespace liewild
