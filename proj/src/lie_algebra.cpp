#include "liewild/lie_algebra.hpp"

#include <algorithm>

namespace liewild {

StructureConstants::StructureConstants(std::size_t n)
    : StructureConstants(n, std::vector<std::string>()) {}

StructureConstants::StructureConstants(std::size_t n, std::vector<std::string> names)
    : dim(n), basis_names(std::move(names)) {
  if (basis_names.empty()) {
    basis_names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) basis_names.push_back("e" + std::to_string(i));
  }
  if (basis_names.size() != n)
    throw DimensionMismatch("structure constants: name count != dimension");
}

void StructureConstants::set(std::size_t i, std::size_t j, Terms terms) {
  if (i >= dim || j >= dim) throw IndexOutOfRange("bracket entry index out of range");
  bool flip = false;
  if (i == j) {
    for (const auto& [k, c] : terms)
      if (c != 0) throw ValidationError("[x, x] must vanish (antisymmetry)");
    return;
  }
  if (i > j) {
    std::swap(i, j);
    flip = true;
  }
  std::map<std::size_t, Rat> merged;
  for (auto& [k, c] : terms) {
    if (k >= dim) throw IndexOutOfRange("bracket coefficient index out of range");
    merged[k] += flip ? Rat(-c) : c;
  }
  Terms normal;
  for (auto& [k, c] : merged)
    if (c != 0) normal.emplace_back(k, c);
  if (table.count({i, j})) throw ValidationError("duplicate bracket entry");
  if (!normal.empty()) table[{i, j}] = std::move(normal);
}

LieAlgebra LieAlgebra::validate(StructureConstants sc) {
  const std::size_t n = sc.dim;
  if (sc.basis_names.size() != n)
    throw DimensionMismatch("structure constants: name count != dimension");
  for (const auto& [key, terms] : sc.table) {
    if (key.first >= key.second || key.second >= n)
      throw IndexOutOfRange("bracket table key out of range");
    for (const auto& [k, c] : terms) {
      if (k >= n) throw IndexOutOfRange("bracket coefficient index out of range");
      if (c == 0) throw ValidationError("explicit zero coefficient in sparse table");
    }
  }
  LieAlgebra l(std::move(sc));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec ei(n, Rat(0)), ej(n, Rat(0)), ek(n, Rat(0));
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        Vec res = vec_add(vec_add(l.bracket(l.bracket_basis(i, j), ek),
                                  l.bracket(l.bracket_basis(j, k), ei)),
                          l.bracket(l.bracket_basis(k, i), ej));
        if (!vec_is_zero(res))
          throw JacobiViolation(static_cast<int>(i), static_cast<int>(j),
                                static_cast<int>(k), vec_str(res));
      }
  return l;
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec r(dim(), Rat(0));
  if (i == j) return r;
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = sc_.table.find({i, j});
  if (it == sc_.table.end()) return r;
  for (const auto& [k, c] : it->second) r[k] = flip ? Rat(-c) : c;
  return r;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw DimensionMismatch("bracket: vector length != dimension");
  Vec r(dim(), Rat(0));
  for (const auto& [key, terms] : sc_.table) {
    const auto [i, j] = key;
    const Rat coef = x[i] * y[j] - x[j] * y[i];
    if (coef == 0) continue;
    for (const auto& [k, c] : terms) r[k] += coef * c;
  }
  return r;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec ej(dim(), Rat(0));
    ej[j] = 1;
    Vec col = bracket(x, ej);
    for (std::size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

Matrix killing_form(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Matrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, Rat(0));
    e[i] = 1;
    ads.push_back(l.ad(e));
  }
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rat t(0);  // tr(A B) without forming the product
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (ads[i].at(r, c) != 0) t += ads[i].at(r, c) * ads[j].at(c, r);
      k.at(i, j) = t;
      k.at(j, i) = t;
    }
  return k;
}

bool is_subalgebra(const LieAlgebra& l, const Subspace& v) {
  for (std::size_t a = 0; a < v.dim(); ++a)
    for (std::size_t b = a + 1; b < v.dim(); ++b)
      if (!v.contains(l.bracket(v.basis_vector(a), v.basis_vector(b)))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& l, const Subspace& v) {
  for (std::size_t i = 0; i < l.dim(); ++i) {
    Vec e(l.dim(), Rat(0));
    e[i] = 1;
    for (std::size_t b = 0; b < v.dim(); ++b)
      if (!v.contains(l.bracket(e, v.basis_vector(b)))) return false;
  }
  return true;
}

Subspace derived_subalgebra(const LieAlgebra& l, const Subspace& v) {
  if (!is_subalgebra(l, v)) throw NotASubalgebra("derived_subalgebra: not closed under bracket");
  std::vector<Vec> gens;
  for (std::size_t a = 0; a < v.dim(); ++a)
    for (std::size_t b = a + 1; b < v.dim(); ++b)
      gens.push_back(l.bracket(v.basis_vector(a), v.basis_vector(b)));
  return Subspace::span(l.dim(), gens);
}

bool is_solvable(const LieAlgebra& l, const Subspace& v) {
  Subspace cur = v;
  while (cur.dim() > 0) {
    Subspace next = derived_subalgebra(l, cur);
    if (next.dim() == cur.dim()) return false;
    cur = next;
  }
  return true;
}

Subspace radical(const LieAlgebra& l) {
  const Subspace derived = derived_subalgebra(l, l.whole());
  if (derived.dim() == 0) return l.whole();
  const Matrix conditions = derived.basis() * killing_form(l);
  return Subspace::span(l.dim(), kernel_basis(conditions));
}

Subspace center(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  if (n == 0) return Subspace::zero(0);
  Matrix stacked(0, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, Rat(0));
    e[i] = 1;
    stacked = vstack(stacked, l.ad(e));
  }
  return Subspace::span(n, kernel_basis(stacked));
}

bool ModuleAction::is_zero() const {
  return std::all_of(matrices.begin(), matrices.end(),
                     [](const Matrix& m) { return m.is_zero(); });
}

ModuleAction quotient_module_action(const LieAlgebra& l, const Subspace& levi,
                                    const Subspace& rad) {
  if (levi.ambient() != l.dim() || rad.ambient() != l.dim())
    throw DimensionMismatch("quotient_module_action: ambient mismatch");
  if (subspace_intersect(levi, rad).dim() != 0 ||
      subspace_sum(levi, rad).dim() != l.dim() || !is_subalgebra(l, levi))
    throw NotComplementary("quotient_module_action: levi does not complement the radical");
  if (!is_ideal(l, rad)) throw NotAnIdeal("quotient_module_action: radical is not an ideal");

  const Subspace square = derived_subalgebra(l, rad);
  // Quotient representatives: rows of rad's canonical basis independent of [R,R].
  std::vector<Vec> reps;
  Matrix work = square.basis();
  for (std::size_t i = 0; i < rad.dim(); ++i) {
    const Vec cand = rad.basis_vector(i);
    Matrix trial = vstack(work, Matrix::from_rows(l.dim(), {cand}));
    if (rank(trial) == work.rows() + 1) {
      reps.push_back(cand);
      work = trial;
    }
  }
  const std::size_t q = reps.size();

  Matrix coords_basis = vstack(square.basis(), Matrix::from_rows(l.dim(), reps)).transpose();
  ModuleAction act;
  act.rep_dim = q;
  act.quotient_reps = Matrix::from_rows(l.dim(), reps);
  for (std::size_t s = 0; s < levi.dim(); ++s) {
    Matrix rho(q, q);
    for (std::size_t j = 0; j < q; ++j) {
      const Vec image = l.bracket(levi.basis_vector(s), reps[j]);
      auto c = solve(coords_basis, image);
      if (!c) throw NotAnIdeal("quotient_module_action: bracket leaves the radical");
      for (std::size_t k = 0; k < q; ++k) rho.at(k, j) = (*c)[square.dim() + k];
    }
    act.matrices.push_back(std::move(rho));
  }
  return act;
}

LieAlgebra change_basis(const LieAlgebra& l, const Matrix& p) {
  const std::size_t n = l.dim();
  if (p.rows() != n || p.cols() != n) throw DimensionMismatch("change_basis: shape");
  auto pinv = inverse(p);
  if (!pinv) throw ValidationError("change_basis: matrix is singular");
  StructureConstants sc(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec be = l.bracket(p.row(i), p.row(j));
      StructureConstants::Terms terms;
      // coefficients in the new basis: row vector be . p^{-1}
      for (std::size_t k = 0; k < n; ++k) {
        Rat c(0);
        for (std::size_t t = 0; t < n; ++t)
          if (be[t] != 0) c += be[t] * pinv->at(t, k);
        if (c != 0) terms.emplace_back(k, c);
      }
      sc.set(i, j, std::move(terms));
    }
  return LieAlgebra::validate(std::move(sc));
}

Subspace change_basis(const Subspace& s, const Matrix& p_inverse) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Vec v = s.basis_vector(i);
    Vec r(s.ambient(), Rat(0));
    for (std::size_t k = 0; k < s.ambient(); ++k)
      for (std::size_t t = 0; t < s.ambient(); ++t)
        if (v[t] != 0) r[k] += v[t] * p_inverse.at(t, k);
    rows.push_back(std::move(r));
  }
  return Subspace::span(s.ambient(), rows);
}

Vec RestrictedAlgebra::to_ambient(const Vec& local) const {
  Vec r(embedding.cols(), Rat(0));
  for (std::size_t i = 0; i < embedding.rows(); ++i)
    if (local[i] != 0)
      for (std::size_t j = 0; j < embedding.cols(); ++j)
        r[j] += local[i] * embedding.at(i, j);
  return r;
}

Subspace RestrictedAlgebra::to_ambient(const Subspace& local) const {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < local.dim(); ++i) rows.push_back(to_ambient(local.basis_vector(i)));
  return Subspace::span(embedding.cols(), rows);
}

RestrictedAlgebra restrict_to_subalgebra(const LieAlgebra& l, const Subspace& v) {
  const std::size_t d = v.dim();
  StructureConstants sc(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const Vec br = l.bracket(v.basis_vector(a), v.basis_vector(b));
      auto c = v.coordinates(br);
      if (!c) throw NotASubalgebra("restrict_to_subalgebra: not closed under bracket");
      StructureConstants::Terms terms;
      for (std::size_t k = 0; k < d; ++k)
        if ((*c)[k] != 0) terms.emplace_back(k, (*c)[k]);
      sc.set(a, b, std::move(terms));
    }
  return RestrictedAlgebra{LieAlgebra::validate(std::move(sc)), v.basis()};
}

Vec QuotientAlgebra::project(const Vec& ambient) const {
  const Vec full = basis_inverse.apply(ambient);
  return Vec(full.begin() + static_cast<long>(ideal.dim()), full.end());
}

QuotientAlgebra quotient_by_ideal(const LieAlgebra& l, const Subspace& ideal) {
  if (!is_ideal(l, ideal)) throw NotAnIdeal("quotient_by_ideal: subspace is not an ideal");
  const std::vector<Vec> sect = completion_vectors(ideal);
  const std::size_t q = sect.size();
  const Matrix full = vstack(ideal.basis(), Matrix::from_rows(l.dim(), sect));
  auto inv = inverse(full);
  if (!inv) throw InternalError("quotient_by_ideal: completed basis is singular");
  // Coordinates of v in the rows of `full` solve c . full = v, i.e. c = (full^T)^{-1} v.
  const Matrix coord = inv->transpose();

  QuotientAlgebra res{LieAlgebra::validate(StructureConstants(0)), ideal,
                      Matrix::from_rows(l.dim(), sect), coord};
  StructureConstants sc(q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) {
      const Vec br = l.bracket(sect[a], sect[b]);
      const Vec c = res.project(br);
      StructureConstants::Terms terms;
      for (std::size_t k = 0; k < q; ++k)
        if (c[k] != 0) terms.emplace_back(k, c[k]);
      sc.set(a, b, std::move(terms));
    }
  res.algebra = LieAlgebra::validate(std::move(sc));
  return res;
}

namespace {

// Basis of {T : T ad_x = ad_x T for all basis x}, as matrices.
std::vector<Matrix> centroid_basis(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, Rat(0));
    e[i] = 1;
    ads.push_back(l.ad(e));
  }
  // Unknown T as n^2 entries, row-major: T[r][c] = t[r*n + c].
  Matrix sys(n * n * n, n * n);
  std::size_t eq = 0;
  for (const Matrix& a : ads) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        // (a T - T a)[r][c] = sum_k a[r][k] T[k][c] - T[r][k] a[k][c]
        for (std::size_t k = 0; k < n; ++k) {
          sys.at(eq, k * n + c) += a.at(r, k);
          sys.at(eq, r * n + k) -= a.at(k, c);
        }
        ++eq;
      }
  }
  std::vector<Matrix> basis;
  for (const Vec& t : kernel_basis(sys)) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.at(r, c) = t[r * n + c];
    basis.push_back(std::move(m));
  }
  return basis;
}

Matrix eval_poly_at(const std::vector<Rat>& coeffs, const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * m;
    for (std::size_t d = 0; d < n; ++d) acc.at(d, d) += coeffs[i];
  }
  return acc;
}

void decompose_piece(const LieAlgebra& l, const Subspace& piece,
                     std::vector<Subspace>& out) {
  const RestrictedAlgebra sub = restrict_to_subalgebra(l, piece);
  const std::vector<Matrix> cen = centroid_basis(sub.algebra);
  if (cen.size() <= 1) {
    out.push_back(piece);
    return;
  }
  // Candidate splitting elements: centroid basis, then pairwise sums.
  std::vector<Matrix> candidates = cen;
  for (std::size_t a = 0; a < cen.size(); ++a)
    for (std::size_t b = a + 1; b < cen.size(); ++b) candidates.push_back(cen[a] + cen[b]);

  const std::size_t d = piece.dim();
  for (const Matrix& t : candidates) {
    const std::vector<Rat> mp = min_poly(t);
    const std::vector<Rat> roots = rational_roots(mp);
    if (roots.empty()) continue;
    std::vector<Subspace> parts;
    std::size_t covered = 0;
    // Divide out the rational linear factors to find the residual factor.
    std::vector<Rat> residual = mp;
    for (const Rat& lam : roots) {
      Matrix shifted = t;
      for (std::size_t i = 0; i < d; ++i) shifted.at(i, i) -= lam;
      Subspace eig = Subspace::span(d, kernel_basis(shifted));
      if (eig.dim() == 0) continue;
      parts.push_back(eig);
      covered += eig.dim();
      // residual := residual / (x - lam)
      std::vector<Rat> quot(residual.size() - 1, Rat(0));
      Rat carry(0);
      for (std::size_t i = residual.size(); i-- > 1;) {
        carry = residual[i] + carry * lam;
        quot[i - 1] = carry;
      }
      residual = quot;
    }
    if (residual.size() > 1) {
      Subspace rest = Subspace::span(d, kernel_basis(eval_poly_at(residual, t)));
      if (rest.dim() > 0) {
        parts.push_back(rest);
        covered += rest.dim();
      }
    }
    if (covered != d || parts.size() < 2) continue;
    for (const Subspace& local : parts) decompose_piece(l, sub.to_ambient(local), out);
    return;
  }
  throw NonSplit("simple_ideal_decomposition: splitting needs an irrational eigenvalue");
}

}  // namespace

std::vector<Subspace> simple_ideal_decomposition(const LieAlgebra& l) {
  if (radical(l).dim() != 0) throw NotSemisimple("simple_ideal_decomposition: nonzero radical");
  std::vector<Subspace> out;
  if (l.dim() == 0) return out;
  decompose_piece(l, l.whole(), out);
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.ambient(); ++j) {
        if (a.basis().at(i, j) != b.basis().at(i, j)) return a.basis().at(i, j) < b.basis().at(i, j);
      }
    return false;
  });
  return out;
}

}  // namespace liewild
