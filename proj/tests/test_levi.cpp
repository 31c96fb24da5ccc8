#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liewild/levi.hpp"
#include "liewild/named.hpp"
#include "support.hpp"

using namespace liewild;
namespace ts = liewild::testsupport;

namespace {

// The four Levi postconditions, checked exactly.
void check_levi(const LieAlgebra& l) {
  const Subspace r = radical(l);
  const Subspace s = levi_subalgebra(l);
  CHECK(s.dim() + r.dim() == l.dim());
  CHECK(subspace_intersect(s, r).dim() == 0);
  CHECK(subspace_sum(s, r).dim() == l.dim());
  CHECK(is_subalgebra(l, s));
  // Killing form of l restricted to s is nondegenerate.
  if (s.dim() > 0) {
    const Matrix k = killing_form(l);
    const Matrix restricted = s.basis() * k * s.basis().transpose();
    CHECK(rank(restricted) == s.dim());
  }
}

}  // namespace

TEST_CASE("levi of a semisimple algebra is the whole algebra") {
  LieAlgebra l = build_named("sl(3)");
  CHECK(levi_subalgebra(l) == l.whole());
}

TEST_CASE("levi of a solvable algebra is zero") {
  CHECK(levi_subalgebra(build_named("heisenberg")).dim() == 0);
  CHECK(levi_subalgebra(build_named("abelian(4)")).dim() == 0);
  CHECK(levi_subalgebra(build_named("twodim_nonabelian")).dim() == 0);
}

TEST_CASE("levi postconditions across the construction corpus") {
  for (const char* recipe : {
           "sl(2)",
           "direct_sum(sl(2), abelian(1))",
           "direct_sum(sl(3), abelian(2))",
           "semidirect(sl(2), hw(1))",
           "semidirect(sl(2), hw(2))",
           "semidirect(sl(2), hw(1)+(2))",
           "semidirect(sl(2), hw(0)+(0))",
           "scale_action(semidirect(sl(2), hw(1)))",
           "sl2_heisenberg",
           "direct_sum(sl(3), semidirect(sl(2), hw(1)))",
       })
    check_levi(build_named(recipe));
}

TEST_CASE("levi postconditions survive random base changes") {
  for (const char* recipe :
       {"semidirect(sl(2), hw(1))", "sl2_heisenberg",
        "scale_action(semidirect(sl(2), hw(1)))", "direct_sum(sl(2), abelian(2))"}) {
    LieAlgebra l = build_named(recipe);
    for (int t = 0; t < 6; ++t) check_levi(change_basis(l, ts::random_invertible(l.dim())));
  }
}

namespace {

// sl2 plus the upper-triangular 4x4 matrices. The radical has derived series
// of length three, so levi_subalgebra runs two nested correction stages.
LieAlgebra sl2_plus_borel4() {
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) pos.emplace_back(i, j);
  auto idx = [&](int i, int j) {
    for (std::size_t k = 0; k < pos.size(); ++k)
      if (pos[k] == std::make_pair(i, j)) return 3 + k;
    throw std::logic_error("not upper triangular");
  };
  StructureConstants sc(3 + pos.size());
  sc.set(1, 0, {{0, Rat(2)}});
  sc.set(1, 2, {{2, Rat(-2)}});
  sc.set(0, 2, {{1, Rat(1)}});
  for (std::size_t p = 0; p < pos.size(); ++p)
    for (std::size_t q = p + 1; q < pos.size(); ++q) {
      const auto [a, b] = pos[p];
      const auto [c, d] = pos[q];
      std::map<std::size_t, Rat> terms;  // [E_ab, E_cd] = d_bc E_ad - d_da E_cb
      if (b == c) terms[idx(a, d)] += 1;
      if (d == a) terms[idx(c, b)] -= 1;
      StructureConstants::Terms t;
      for (const auto& [k, cf] : terms)
        if (cf != 0) t.emplace_back(k, cf);
      sc.set(3 + p, 3 + q, std::move(t));
    }
  return LieAlgebra::validate(std::move(sc));
}

}  // namespace

TEST_CASE("levi peels a radical with derived length three") {
  LieAlgebra l = sl2_plus_borel4();
  REQUIRE(l.dim() == 13);
  const Subspace r = radical(l);
  CHECK(r.dim() == 10);
  // derived series of the radical: 10 -> 6 -> 3 -> 0
  const Subspace r1 = derived_subalgebra(l, r);
  CHECK(r1.dim() == 6);
  const Subspace r2 = derived_subalgebra(l, r1);
  CHECK(r2.dim() == 3);
  CHECK(derived_subalgebra(l, r2).dim() == 0);
  check_levi(l);
  check_levi(change_basis(l, ts::random_invertible(13, 1)));
}

TEST_CASE("levi handles a nonabelian radical via the derived-series stages") {
  // sl2 acting on the Heisenberg radical needs one correction stage.
  LieAlgebra l = build_named("sl2_heisenberg");
  const Subspace s = levi_subalgebra(l);
  CHECK(s.dim() == 3);
  check_levi(l);
  // After mixing the basis, the complement really requires correcting.
  Matrix p = Matrix::identity(6);
  p.at(0, 3) = 1;  // e += a
  p.at(1, 4) = -2; // h -= 2b
  check_levi(change_basis(l, p));
}

TEST_CASE("is_direct_summand distinguishes sums from semidirect products") {
  LieAlgebra gl2 = build_named("direct_sum(sl(2), abelian(1))");
  Subspace sl2_part = Subspace::span(4, {Vec{Rat(1), Rat(0), Rat(0), Rat(0)},
                                         Vec{Rat(0), Rat(1), Rat(0), Rat(0)},
                                         Vec{Rat(0), Rat(0), Rat(1), Rat(0)}});
  Subspace z = Subspace::span(4, {Vec{Rat(0), Rat(0), Rat(0), Rat(1)}});
  CHECK(is_direct_summand(gl2, sl2_part, z));

  LieAlgebra sd = build_named("semidirect(sl(2), hw(1))");
  Subspace s = Subspace::span(5, {Vec{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)},
                                  Vec{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)},
                                  Vec{Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)}});
  CHECK(!is_direct_summand(sd, s, radical(sd)));

  LieAlgebra ab = build_named("abelian(2)");
  CHECK(is_direct_summand(ab, Subspace::span(2, {Vec{Rat(1), Rat(0)}}),
                          Subspace::span(2, {Vec{Rat(0), Rat(1)}})));

  CHECK_THROWS_AS(is_direct_summand(gl2, sl2_part, sl2_part), NotComplementary);
}
