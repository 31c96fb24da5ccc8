#include "liewild/classifier.hpp"

#include <algorithm>

namespace liewild {

Verdict Verdict::tame(int cls) {
  Verdict v;
  v.kind = Kind::Tame;
  v.tame_class = cls;
  return v;
}

Verdict Verdict::wild(WildReason reason, std::string witness) {
  Verdict v;
  v.kind = Kind::Wild;
  v.reason = reason;
  v.witness = std::move(witness);
  v.controlled = true;
  return v;
}

Verdict Verdict::unsupported(std::string cause) {
  Verdict v;
  v.kind = Kind::Unsupported;
  v.cause = std::move(cause);
  return v;
}

namespace {

bool sl2_relations_hold(const LieAlgebra& l, const Vec& h, const Vec& e, const Vec& f) {
  return l.bracket(h, e) == vec_scale(Rat(2), e) &&
         l.bracket(h, f) == vec_scale(Rat(-2), f) && l.bracket(e, f) == h;
}

// Kernel vector of (ad_h - lambda) inside the restricted algebra, if any.
std::optional<Vec> ad_eigenvector(const LieAlgebra& local, const Vec& h, const Rat& lambda) {
  Matrix m = local.ad(h);
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) -= lambda;
  const auto k = kernel_basis(m);
  if (k.empty()) return std::nullopt;
  return k.front();
}

std::optional<Sl2Triple> triple_from_h_candidate(const LieAlgebra& l,
                                                 const RestrictedAlgebra& sub,
                                                 const Vec& x_local) {
  const Matrix a = sub.algebra.ad(x_local);
  const std::vector<Rat> cp = char_poly(a);  // x^3 + c2 x^2 + c1 x + c0
  if (cp[2] != 0 || cp[0] != 0 || cp[1] >= 0) return std::nullopt;
  // Eigenvalues {t, 0, -t} with t^2 = -c1; need t rational.
  const Rat t2 = -cp[1];
  const Int num = t2.get_num(), den = t2.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
      mpz_perfect_square_p(den.get_mpz_t()) == 0)
    return std::nullopt;
  Int num_root, den_root;
  mpz_sqrt(num_root.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), den.get_mpz_t());
  Rat t(num_root);
  t /= Rat(den_root);
  if (t == 0) return std::nullopt;

  const Vec h_local = vec_scale(Rat(2) / t, x_local);
  auto e_local = ad_eigenvector(sub.algebra, h_local, Rat(2));
  auto f_local = ad_eigenvector(sub.algebra, h_local, Rat(-2));
  if (!e_local || !f_local) return std::nullopt;
  // [e, f] lies in the centralizer of h, i.e. span{h}; rescale e.
  const Vec ef = sub.algebra.bracket(*e_local, *f_local);
  const Subspace h_line = Subspace::span(h_local.size(), {h_local});
  auto coord = h_line.coordinates(ef);
  if (!coord || (*coord)[0] == 0) return std::nullopt;
  const Vec e_scaled = vec_scale(Rat(1) / (*coord)[0], *e_local);
  if (!sl2_relations_hold(sub.algebra, h_local, e_scaled, *f_local)) return std::nullopt;

  Sl2Triple out{sub.to_ambient(h_local), sub.to_ambient(e_scaled), sub.to_ambient(*f_local)};
  if (!sl2_relations_hold(l, out.h, out.e, out.f))
    throw InternalError("find_sl2_triple: ambient relations disagree with local ones");
  return out;
}

}  // namespace

std::optional<Sl2Triple> find_sl2_triple(const LieAlgebra& l, const Subspace& c) {
  if (c.dim() != 3 || !is_subalgebra(l, c)) return std::nullopt;
  const RestrictedAlgebra sub = restrict_to_subalgebra(l, c);
  // Candidate split elements: basis vectors first, then a small integer box.
  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < 3; ++i) {
    Vec e(3, Rat(0));
    e[i] = 1;
    candidates.push_back(e);
  }
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int cc = -2; cc <= 2; ++cc) {
        if (a == 0 && b == 0 && cc == 0) continue;
        candidates.push_back(Vec{Rat(a), Rat(b), Rat(cc)});
      }
  for (const Vec& x : candidates)
    if (auto triple = triple_from_h_candidate(l, sub, x)) return triple;
  return std::nullopt;
}

namespace {

// Pull the standard sl2 basis of 2x2 matrices back through the action of the
// acting ideal. rho[a] is the matrix of the a-th basis row of `acting`.
std::optional<Sl2Triple> triple_from_action(const LieAlgebra& l, const Subspace& acting,
                                            const std::vector<Matrix>& rho) {
  if (acting.dim() != rho.size()) return std::nullopt;
  for (const Matrix& m : rho)
    if (m.rows() != 2 || m.cols() != 2 || m.trace() != 0) return std::nullopt;
  Matrix sys(4, acting.dim());
  for (std::size_t a = 0; a < rho.size(); ++a) {
    sys.at(0, a) = rho[a].at(0, 0);
    sys.at(1, a) = rho[a].at(0, 1);
    sys.at(2, a) = rho[a].at(1, 0);
    sys.at(3, a) = rho[a].at(1, 1);
  }
  auto pullback = [&](long e00, long e01, long e10, long e11) -> std::optional<Vec> {
    auto c = solve(sys, Vec{Rat(e00), Rat(e01), Rat(e10), Rat(e11)});
    if (!c) return std::nullopt;
    Vec v(l.dim(), Rat(0));
    for (std::size_t a = 0; a < acting.dim(); ++a)
      if ((*c)[a] != 0) v = vec_add(v, vec_scale((*c)[a], acting.basis_vector(a)));
    return v;
  };
  auto h = pullback(1, 0, 0, -1);
  auto e = pullback(0, 1, 0, 0);
  auto f = pullback(0, 0, 1, 0);
  if (!h || !e || !f) return std::nullopt;
  if (!sl2_relations_hold(l, *h, *e, *f)) return std::nullopt;
  return Sl2Triple{*h, *e, *f};
}

}  // namespace

Verdict resolve_two_dim_irreducible(const LieAlgebra& l, const Subspace& acting,
                                    const std::vector<Matrix>* action,
                                    bool has_kernel_part) {
  std::optional<Sl2Triple> triple;
  if (action) triple = triple_from_action(l, acting, *action);
  if (!triple) triple = find_sl2_triple(l, acting);
  if (!triple)
    return Verdict::unsupported(
        "the acting three-dimensional ideal admits no rational (h,e,f) split; over Q "
        "this form cannot be recognized as sl2 without a field extension");
  return Verdict::tame(has_kernel_part ? 5 : 4);
}

Verdict classify(const LieAlgebra& l) {
  const Subspace rad = radical(l);
  if (rad.dim() == 0) return Verdict::tame(1);
  if (rad.dim() == l.dim()) {
    if (l.dim() <= 1) return Verdict::tame(2);
    return Verdict::wild(WildReason::Solvable,
                         "solvable of dimension " + std::to_string(l.dim()));
  }

  const Subspace square = derived_subalgebra(l, rad);
  if (square.dim() != 0) {
    const std::size_t q = rad.dim() - square.dim();
    if (q == 1)
      return Verdict::wild(
          WildReason::OneDimIdentityAction,
          "nonabelian radical with one-dimensional quotient by its derived algebra; a "
          "scaling element acts as the identity on an irreducible layer");
    return Verdict::wild(WildReason::NonabelianRadical,
                         "nonabelian radical: dim [R,R] = " + std::to_string(square.dim()) +
                             ", dim R/[R,R] = " + std::to_string(q));
  }

  const Subspace levi = levi_subalgebra(l);
  if (rad.dim() == 1) return Verdict::tame(3);
  if (rad.dim() >= 3)
    return Verdict::wild(WildReason::RadicalDimAtLeast3,
                         "abelian radical of dimension " + std::to_string(rad.dim()));

  // Two-dimensional abelian radical.
  const ModuleAction act = quotient_module_action(l, levi, rad);
  if (act.is_zero())
    return Verdict::wild(WildReason::DecomposableTwoDim,
                         "the Levi part acts trivially, so the two-dimensional radical "
                         "splits into two one-dimensional summands");

  // Kernel of the action inside the Levi part.
  Matrix vec_sys(4, levi.dim());
  for (std::size_t s = 0; s < levi.dim(); ++s) {
    vec_sys.at(0, s) = act.matrices[s].at(0, 0);
    vec_sys.at(1, s) = act.matrices[s].at(0, 1);
    vec_sys.at(2, s) = act.matrices[s].at(1, 0);
    vec_sys.at(3, s) = act.matrices[s].at(1, 1);
  }
  std::vector<Vec> kernel_rows;
  for (const Vec& c : kernel_basis(vec_sys)) {
    Vec v(l.dim(), Rat(0));
    for (std::size_t s = 0; s < levi.dim(); ++s)
      if (c[s] != 0) v = vec_add(v, vec_scale(c[s], levi.basis_vector(s)));
    kernel_rows.push_back(std::move(v));
  }
  const Subspace kernel_part = Subspace::span(l.dim(), kernel_rows);

  // Complement ideal: the Killing orthocomplement of the kernel inside S.
  const RestrictedAlgebra s_res = restrict_to_subalgebra(l, levi);
  const Matrix kappa_s = killing_form(s_res.algebra);
  std::vector<Vec> kernel_local;
  for (std::size_t i = 0; i < kernel_part.dim(); ++i) {
    auto c = levi.coordinates(kernel_part.basis_vector(i));
    if (!c) throw InternalError("classify: kernel escaped the Levi part");
    kernel_local.push_back(*c);
  }
  Subspace acting_local;
  if (kernel_local.empty()) {
    acting_local = Subspace::full(levi.dim());
  } else {
    const Matrix cond = Matrix::from_rows(levi.dim(), kernel_local) * kappa_s;
    acting_local = Subspace::span(levi.dim(), kernel_basis(cond));
  }
  const Subspace acting = s_res.to_ambient(acting_local);

  if (acting.dim() != 3)
    return Verdict::wild(WildReason::TwoDimActionNotSl2,
                         "the faithful part of the action on the two-dimensional radical "
                         "has dimension " + std::to_string(acting.dim()) + " != 3");

  // Action matrices of the acting ideal's basis rows.
  std::vector<Matrix> rho_acting;
  for (std::size_t a = 0; a < acting.dim(); ++a) {
    auto c = levi.coordinates(acting.basis_vector(a));
    if (!c) throw InternalError("classify: acting ideal escaped the Levi part");
    Matrix m(2, 2);
    for (std::size_t s = 0; s < levi.dim(); ++s)
      if ((*c)[s] != 0) m = m + act.matrices[s].scaled((*c)[s]);
    rho_acting.push_back(std::move(m));
  }
  return resolve_two_dim_irreducible(l, acting, &rho_acting, kernel_part.dim() != 0);
}

std::string rule_id(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::Tame:
      switch (v.tame_class) {
        case 1: return "semisimple";
        case 2: return "one_dimensional";
        case 3: return "semisimple_plus_one_dimensional";
        case 4: return "sl2_natural_semidirect";
        case 5: return "semisimple_plus_sl2_semidirect";
      }
      return "tame";
    case Verdict::Kind::Wild:
      switch (v.reason) {
        case WildReason::Solvable: return "solvable";
        case WildReason::NonabelianRadical: return "nonabelian_radical";
        case WildReason::OneDimIdentityAction: return "one_dimensional_identity_action";
        case WildReason::DecomposableTwoDim: return "decomposable_two_dimensional_radical";
        case WildReason::RadicalDimAtLeast3: return "radical_dimension_at_least_three";
        case WildReason::TwoDimActionNotSl2: return "two_dimensional_action_not_sl2";
      }
      return "wild";
    case Verdict::Kind::Unsupported:
      return "unsupported";
  }
  return "unknown";
}

std::string explain(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::Tame:
      switch (v.tame_class) {
        case 1:
          return "Tame, class 1: the algebra is semisimple (zero radical, nondegenerate "
                 "Killing form). Its finite-dimensional modules are completely reducible "
                 "with discrete highest-weight classification, so the representation type "
                 "is tame.";
        case 2:
          return "Tame, class 2: the one-dimensional algebra. Its representations are "
                 "single matrices up to conjugation, classified by Jordan form.";
        case 3:
          return "Tame, class 3: a direct sum of a semisimple algebra and the "
                 "one-dimensional algebra. Indecomposables are simple modules of the "
                 "semisimple part tensored with a Jordan cell.";
        case 4:
          return "Tame, class 4: sl2 acting on its two-dimensional irreducible module as "
                 "an abelian radical. The associated quiver is a chain with double arrows "
                 "and one degree-2 relation per vertex, a tame matrix problem.";
        case 5:
          return "Tame, class 5: a direct sum of a semisimple algebra and the semidirect "
                 "product of sl2 with its two-dimensional irreducible module.";
      }
      return "Tame.";
    case Verdict::Kind::Wild:
      switch (v.reason) {
        case WildReason::Solvable:
          return "Controlled wild: a solvable algebra of dimension at least two has a "
                 "two-dimensional quotient, and already the two-dimensional algebras "
                 "interpret the wild two-matrix problem. (" + v.witness + ")";
        case WildReason::NonabelianRadical:
          return "Controlled wild: the radical is nonabelian. Passing to the quotient by "
                 "its derived algebra leads to quiver problems with too few relations to "
                 "stay tame. (" + v.witness + ")";
        case WildReason::OneDimIdentityAction:
          return "Controlled wild: the radical is nonabelian with a one-dimensional "
                 "quotient by its derived algebra; a scaling element acting as the "
                 "identity on an irreducible layer forces the wild two-loops-and-an-arrow "
                 "quiver. (" + v.witness + ")";
        case WildReason::DecomposableTwoDim:
          return "Controlled wild: the two-dimensional abelian radical decomposes into "
                 "two one-dimensional summands, so the quiver is a disjoint union of "
                 "vertices with two loops: a pair of matrices with one homogeneous "
                 "degree-2 condition, which is wild. (" + v.witness + ")";
        case WildReason::RadicalDimAtLeast3:
          return "Controlled wild: an abelian radical of dimension at least three admits "
                 "a large module, whose quiver contains a wild subquiver. (" + v.witness + ")";
        case WildReason::TwoDimActionNotSl2:
          return "Controlled wild: the two-dimensional radical is not the natural module "
                 "of a single split sl2 summand. (" + v.witness + ")";
      }
      return "Controlled wild.";
    case Verdict::Kind::Unsupported:
      return "Unsupported over Q: " + v.cause +
             " Extending scalars would be needed for a definite verdict; this tool never "
             "guesses.";
  }
  return "Unknown verdict.";
}

}  // namespace liewild
