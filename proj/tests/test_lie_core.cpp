#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liewild/levi.hpp"
#include "liewild/named.hpp"
#include "support.hpp"

using namespace liewild;
namespace ts = liewild::testsupport;

namespace {

// sl2 over Q(sqrt 2) viewed as a six-dimensional Q-algebra: simple over Q but
// with a two-dimensional centroid, so the split into absolutely simple pieces
// needs sqrt 2.
LieAlgebra sl2_over_q_sqrt2() {
  StructureConstants sc(6, {"e", "h", "f", "es", "hs", "fs"});
  sc.set(1, 0, {{0, Rat(2)}});
  sc.set(1, 2, {{2, Rat(-2)}});
  sc.set(0, 2, {{1, Rat(1)}});
  sc.set(1, 3, {{3, Rat(2)}});
  sc.set(1, 5, {{5, Rat(-2)}});
  sc.set(0, 5, {{4, Rat(1)}});
  sc.set(3, 2, {{4, Rat(1)}});
  sc.set(4, 0, {{3, Rat(2)}});
  sc.set(4, 2, {{5, Rat(-2)}});
  sc.set(4, 3, {{0, Rat(4)}});
  sc.set(4, 5, {{2, Rat(-4)}});
  sc.set(3, 5, {{1, Rat(2)}});
  return LieAlgebra::validate(std::move(sc));
}

}  // namespace

TEST_CASE("validate accepts sl2 and the abelian table") {
  CHECK_NOTHROW(ts::sl2());
  CHECK_NOTHROW(LieAlgebra::validate(StructureConstants(4)));
}

TEST_CASE("validate rejects a broken sl2 table") {
  StructureConstants sc(3, {"e", "h", "f"});
  sc.set(1, 0, {{0, Rat(3)}});  // [h,e] = 3e breaks Jacobi on (e,h,f)
  sc.set(1, 2, {{2, Rat(-2)}});
  sc.set(0, 2, {{1, Rat(1)}});
  CHECK_THROWS_AS(LieAlgebra::validate(std::move(sc)), JacobiViolation);
}

TEST_CASE("structure constants reject bad entries") {
  StructureConstants sc(2);
  CHECK_THROWS_AS(sc.set(0, 0, {{1, Rat(1)}}), ValidationError);
  CHECK_THROWS_AS(sc.set(0, 5, {{1, Rat(1)}}), IndexOutOfRange);
  sc.set(0, 1, {{1, Rat(1)}});
  CHECK_THROWS_AS(sc.set(1, 0, {{1, Rat(1)}}), ValidationError);  // duplicate
}

TEST_CASE("bracket: alternation, table lookup, bilinearity") {
  LieAlgebra l = ts::sl2();
  for (int t = 0; t < 10; ++t) {
    Vec x = ts::random_vec(3);
    CHECK(vec_is_zero(l.bracket(x, x)));
  }
  Vec e{Rat(1), Rat(0), Rat(0)}, h{Rat(0), Rat(1), Rat(0)}, f{Rat(0), Rat(0), Rat(1)};
  CHECK(l.bracket(e, f) == h);
  CHECK(l.bracket(h, e) == vec_scale(Rat(2), e));

  LieAlgebra ab = build_named("abelian(3)");
  CHECK(vec_is_zero(ab.bracket(ts::random_vec(3), ts::random_vec(3))));
}

TEST_CASE("killing form of sl2 in basis (e,h,f)") {
  Matrix k = killing_form(ts::sl2());
  CHECK(k.at(1, 1) == Rat(8));
  CHECK(k.at(0, 2) == Rat(4));
  CHECK(k.at(2, 0) == Rat(4));
  CHECK(k.at(0, 0) == Rat(0));
  CHECK(k.at(0, 1) == Rat(0));
  CHECK(k.at(1, 2) == Rat(0));
  CHECK(k.at(2, 2) == Rat(0));
}

TEST_CASE("killing form: abelian is zero, direct sums are block diagonal") {
  CHECK(killing_form(build_named("abelian(3)")).is_zero());
  Matrix k = killing_form(build_named("direct_sum(sl(2), sl(2))"));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 3; j < 6; ++j) {
      CHECK(k.at(i, j) == Rat(0));
      CHECK(k.at(j, i) == Rat(0));
    }
}

TEST_CASE("killing form invariance: k([x,y],z) + k(y,[x,z]) = 0") {
  for (const char* recipe : {"sl(3)", "semidirect(sl(2), hw(2))", "sl2_heisenberg"}) {
    LieAlgebra l = build_named(recipe);
    Matrix k = killing_form(l);
    auto pair = [&](const Vec& a, const Vec& b) {
      Rat s(0);
      for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = 0; j < l.dim(); ++j)
          if (a[i] != 0 && b[j] != 0) s += a[i] * k.at(i, j) * b[j];
      return s;
    };
    for (int t = 0; t < 10; ++t) {
      Vec x = ts::random_vec(l.dim()), y = ts::random_vec(l.dim()), z = ts::random_vec(l.dim());
      CHECK(pair(l.bracket(x, y), z) + pair(y, l.bracket(x, z)) == Rat(0));
    }
  }
}

TEST_CASE("derived subalgebra examples") {
  LieAlgebra ab = build_named("abelian(2)");
  CHECK(derived_subalgebra(ab, ab.whole()).dim() == 0);

  LieAlgebra l = ts::sl2();
  CHECK(derived_subalgebra(l, l.whole()) == l.whole());  // perfect

  LieAlgebra two = build_named("twodim_nonabelian");
  Subspace d = derived_subalgebra(two, two.whole());
  CHECK(d == Subspace::span(2, {Vec{Rat(0), Rat(1)}}));

  // Not closed under bracket: span{e, f} inside sl2.
  Subspace ef = Subspace::span(3, {Vec{Rat(1), Rat(0), Rat(0)}, Vec{Rat(0), Rat(0), Rat(1)}});
  CHECK_THROWS_AS(derived_subalgebra(l, ef), NotASubalgebra);
}

TEST_CASE("solvability of the derived series") {
  LieAlgebra ab = build_named("abelian(3)");
  CHECK(is_solvable(ab, ab.whole()));
  LieAlgebra l = ts::sl2();
  CHECK(!is_solvable(l, l.whole()));
  LieAlgebra two = build_named("twodim_nonabelian");
  CHECK(is_solvable(two, two.whole()));
  LieAlgebra h = build_named("heisenberg");
  CHECK(is_solvable(h, h.whole()));
}

TEST_CASE("radical: semisimple, solvable, reductive examples") {
  CHECK(radical(ts::sl2()).dim() == 0);
  LieAlgebra h = build_named("heisenberg");
  CHECK(radical(h) == h.whole());
  LieAlgebra gl2 = build_named("direct_sum(sl(2), abelian(1))");
  Subspace r = radical(gl2);
  CHECK(r == Subspace::span(4, {Vec{Rat(0), Rat(0), Rat(0), Rat(1)}}));
}

TEST_CASE("radical is an ideal and the quotient data is consistent") {
  for (const char* recipe :
       {"semidirect(sl(2), hw(1))", "semidirect(sl(2), hw(2))", "sl2_heisenberg",
        "scale_action(semidirect(sl(2), hw(1)))"}) {
    LieAlgebra l = build_named(recipe);
    Subspace r = radical(l);
    CHECK(is_ideal(l, r));
    CHECK(is_solvable(l, r));
  }
}

TEST_CASE("radical commutes with base change") {
  for (const char* recipe : {"semidirect(sl(2), hw(1))", "direct_sum(sl(2), abelian(1))"}) {
    LieAlgebra l = build_named(recipe);
    for (int t = 0; t < 5; ++t) {
      Matrix p = ts::random_invertible(l.dim());
      LieAlgebra lp = change_basis(l, p);
      Subspace expected = change_basis(radical(l), *inverse(p));
      CHECK(radical(lp) == expected);
    }
  }
}

TEST_CASE("center examples") {
  LieAlgebra ab = build_named("abelian(2)");
  CHECK(center(ab) == ab.whole());
  CHECK(center(ts::sl2()).dim() == 0);
  LieAlgebra h = build_named("heisenberg");
  CHECK(center(h) == Subspace::span(3, {Vec{Rat(0), Rat(0), Rat(1)}}));
}

TEST_CASE("simple ideal decomposition: sl2, sl3, so3 are simple") {
  for (const char* recipe : {"sl(2)", "sl(3)", "so3"}) {
    LieAlgebra l = build_named(recipe);
    auto parts = simple_ideal_decomposition(l);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0] == l.whole());
  }
}

TEST_CASE("simple ideal decomposition splits sl2 + sl2, also after base change") {
  LieAlgebra l = build_named("direct_sum(sl(2), sl(2))");
  auto check_parts = [](const LieAlgebra& alg, const std::vector<Subspace>& parts) {
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].dim() == 3);
    CHECK(parts[1].dim() == 3);
    CHECK(subspace_sum(parts[0], parts[1]).dim() == 6);
    Matrix k = killing_form(alg);
    for (std::size_t a = 0; a < parts[0].dim(); ++a)
      for (std::size_t b = 0; b < parts[1].dim(); ++b) {
        CHECK(vec_is_zero(alg.bracket(parts[0].basis_vector(a), parts[1].basis_vector(b))));
        Rat s(0);
        const Vec u = parts[0].basis_vector(a), v = parts[1].basis_vector(b);
        for (std::size_t i = 0; i < 6; ++i)
          for (std::size_t j = 0; j < 6; ++j)
            if (u[i] != 0 && v[j] != 0) s += u[i] * k.at(i, j) * v[j];
        CHECK(s == Rat(0));
      }
  };
  check_parts(l, simple_ideal_decomposition(l));
  for (int t = 0; t < 3; ++t) {
    LieAlgebra lp = change_basis(l, ts::random_invertible(6, 1));
    check_parts(lp, simple_ideal_decomposition(lp));
  }
}

TEST_CASE("simple ideal decomposition error modes") {
  CHECK_THROWS_AS(simple_ideal_decomposition(build_named("direct_sum(sl(2), abelian(1))")),
                  NotSemisimple);
  CHECK_THROWS_AS(simple_ideal_decomposition(sl2_over_q_sqrt2()), NonSplit);
}

TEST_CASE("quotient module action on the natural semidirect product") {
  LieAlgebra l = build_named("semidirect(sl(2), hw(1))");
  Subspace levi = Subspace::span(5, {Vec{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)},
                                     Vec{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)},
                                     Vec{Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)}});
  Subspace r = radical(l);
  ModuleAction act = quotient_module_action(l, levi, r);
  REQUIRE(act.rep_dim == 2);
  REQUIRE(act.matrices.size() == 3);
  Matrix rho_e(2, 2), rho_h(2, 2), rho_f(2, 2);
  rho_e.at(0, 1) = 1;
  rho_f.at(1, 0) = 1;
  rho_h.at(0, 0) = 1;
  rho_h.at(1, 1) = -1;
  CHECK(act.matrices[0] == rho_e);
  CHECK(act.matrices[1] == rho_h);
  CHECK(act.matrices[2] == rho_f);
}

TEST_CASE("quotient module action: trivial cases and the homomorphism law") {
  LieAlgebra triv = build_named("direct_sum(sl(2), abelian(1))");
  ModuleAction a0 = quotient_module_action(triv, levi_subalgebra(triv), radical(triv));
  CHECK(a0.rep_dim == 1);
  CHECK(a0.is_zero());

  for (const char* recipe : {"semidirect(sl(2), hw(2))", "sl2_heisenberg"}) {
    LieAlgebra l = build_named(recipe);
    Subspace r = radical(l);
    Subspace s = levi_subalgebra(l);
    ModuleAction act = quotient_module_action(l, s, r);
    // rho([x,y]) = [rho(x), rho(y)] on all basis pairs of the levi part.
    for (std::size_t a = 0; a < s.dim(); ++a)
      for (std::size_t b = 0; b < s.dim(); ++b) {
        const Vec br = l.bracket(s.basis_vector(a), s.basis_vector(b));
        auto c = s.coordinates(br);
        REQUIRE(c.has_value());
        Matrix lhs(act.rep_dim, act.rep_dim);
        for (std::size_t k = 0; k < s.dim(); ++k)
          if ((*c)[k] != 0) lhs = lhs + act.matrices[k].scaled((*c)[k]);
        const Matrix rhs =
            act.matrices[a] * act.matrices[b] - act.matrices[b] * act.matrices[a];
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("quotient module action rejects a non-complement") {
  LieAlgebra l = build_named("semidirect(sl(2), hw(1))");
  Subspace bad = Subspace::span(5, {Vec{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)}});
  CHECK_THROWS_AS(quotient_module_action(l, bad, radical(l)), NotComplementary);
}

TEST_CASE("restrict and quotient round out the subalgebra toolkit") {
  LieAlgebra l = build_named("semidirect(sl(2), hw(1))");
  Subspace r = radical(l);
  QuotientAlgebra q = quotient_by_ideal(l, r);
  CHECK(q.algebra.dim() == 3);
  CHECK(radical(q.algebra).dim() == 0);

  Subspace sl2_part = Subspace::span(5, {Vec{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)},
                                         Vec{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)},
                                         Vec{Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)}});
  RestrictedAlgebra sub = restrict_to_subalgebra(l, sl2_part);
  CHECK(sub.algebra.dim() == 3);
  CHECK(killing_form(sub.algebra).at(1, 1) == Rat(8));
  CHECK_THROWS_AS(
      restrict_to_subalgebra(
          l, Subspace::span(5, {Vec{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)},
                                Vec{Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)}})),
      NotASubalgebra);
}

TEST_CASE("change_basis is a bracket isomorphism") {
  LieAlgebra l = build_named("sl2_heisenberg");
  for (int t = 0; t < 5; ++t) {
    Matrix p = ts::random_invertible(l.dim(), 1);
    Matrix pinv = *inverse(p);
    LieAlgebra lp = change_basis(l, p);
    // f-coordinates of a vector x are x . p^{-1}; brackets must correspond.
    Vec x = ts::random_vec(l.dim()), y = ts::random_vec(l.dim());
    auto to_new = [&](const Vec& v) {
      Vec r(l.dim(), Rat(0));
      for (std::size_t k = 0; k < l.dim(); ++k)
        for (std::size_t i = 0; i < l.dim(); ++i)
          if (v[i] != 0) r[k] += v[i] * pinv.at(i, k);
      return r;
    };
    CHECK(lp.bracket(to_new(x), to_new(y)) == to_new(l.bracket(x, y)));
  }
}
