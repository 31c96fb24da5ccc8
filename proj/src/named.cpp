#include "liewild/named.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace liewild {

namespace {

// ---- recipe AST ----

struct Recipe {
  enum class Kind { Sl, Abelian, Heisenberg, TwodimNonabelian, So3, Sl2Heisenberg,
                    Semidirect, DirectSum, ScaleAction } kind;
  int n = 0;                    // Sl / Abelian parameter
  std::vector<int> module;     // Semidirect: sl2 highest weights, one per summand
  std::vector<Recipe> children;
};

struct Parser {
  std::string s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) {
    for (char c : text)
      if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw BadRecipe("bad recipe '" + s + "': " + why);
  }
  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    std::size_t start = pos;
    while (pos < s.size() &&
           (isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected a name");
    return s.substr(start, pos - start);
  }
  int integer() {
    std::size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected an integer");
    return std::stoi(s.substr(start, pos - start));
  }

  std::vector<int> module_weights() {
    // "hw" already consumed by caller between commas: weights w ('+' w)*
    std::vector<int> hws;
    while (true) {
      bool paren = eat('(');
      hws.push_back(integer());
      if (paren) expect(')');
      if (!eat('+')) break;
    }
    return hws;
  }

  Recipe parse() {
    Recipe r = recipe();
    if (pos != s.size()) fail("trailing input");
    return r;
  }

  Recipe recipe() {
    const std::string name = ident();
    Recipe r{};
    if (name == "sl") {
      r.kind = Recipe::Kind::Sl;
      expect('(');
      r.n = integer();
      expect(')');
      if (r.n < 2) fail("sl(n) needs n >= 2");
    } else if (name == "abelian") {
      r.kind = Recipe::Kind::Abelian;
      expect('(');
      r.n = integer();
      expect(')');
    } else if (name == "heisenberg") {
      r.kind = Recipe::Kind::Heisenberg;
    } else if (name == "twodim_nonabelian") {
      r.kind = Recipe::Kind::TwodimNonabelian;
    } else if (name == "so3") {
      r.kind = Recipe::Kind::So3;
    } else if (name == "sl2_heisenberg") {
      r.kind = Recipe::Kind::Sl2Heisenberg;
    } else if (name == "semidirect") {
      r.kind = Recipe::Kind::Semidirect;
      expect('(');
      r.children.push_back(recipe());
      expect(',');
      if (ident() != "hw") fail("semidirect expects 'hw' before the module weights");
      r.module = module_weights();
      expect(')');
      if (r.children[0].kind != Recipe::Kind::Sl || r.children[0].n != 2)
        fail("semidirect is implemented for the base sl(2)");
    } else if (name == "direct_sum") {
      r.kind = Recipe::Kind::DirectSum;
      expect('(');
      r.children.push_back(recipe());
      expect(',');
      r.children.push_back(recipe());
      expect(')');
    } else if (name == "scale_action") {
      r.kind = Recipe::Kind::ScaleAction;
      expect('(');
      r.children.push_back(recipe());
      expect(')');
      if (r.children[0].kind != Recipe::Kind::Semidirect)
        fail("scale_action applies to a semidirect recipe");
    } else {
      fail("unknown construction '" + name + "'");
    }
    return r;
  }
};

// ---- builders ----

LieAlgebra build_sl(int n) {
  // Basis: E_ij (i < j) lex, then H_k = E_kk - E_{k+1,k+1}, then E_ji (i < j) lex.
  struct Elt {
    std::vector<std::vector<long>> m;
    std::string name;
  };
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<Elt> basis;
  auto unit = [&](std::size_t r, std::size_t c) {
    std::vector<std::vector<long>> m(nn, std::vector<long>(nn, 0));
    m[r][c] = 1;
    return m;
  };
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = i + 1; j < nn; ++j)
      basis.push_back({unit(i, j), "E" + std::to_string(i + 1) + std::to_string(j + 1)});
  for (std::size_t k = 0; k + 1 < nn; ++k) {
    auto m = unit(k, k);
    m[k + 1][k + 1] = -1;
    basis.push_back({m, "H" + std::to_string(k + 1)});
  }
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = i + 1; j < nn; ++j)
      basis.push_back({unit(j, i), "E" + std::to_string(j + 1) + std::to_string(i + 1)});

  const std::size_t dim = basis.size();
  std::vector<std::string> names;
  if (n == 2) {
    names = {"e", "h", "f"};
  } else {
    for (const auto& b : basis) names.push_back(b.name);
  }

  // Coordinates via the vectorized basis.
  Matrix coords(nn * nn, dim);
  for (std::size_t b = 0; b < dim; ++b)
    for (std::size_t r = 0; r < nn; ++r)
      for (std::size_t c = 0; c < nn; ++c) coords.at(r * nn + c, b) = basis[b].m[r][c];

  StructureConstants sc(dim, names);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) {
      Vec comm(nn * nn, Rat(0));
      for (std::size_t r = 0; r < nn; ++r)
        for (std::size_t c = 0; c < nn; ++c) {
          long v = 0;
          for (std::size_t k = 0; k < nn; ++k)
            v += basis[a].m[r][k] * basis[b].m[k][c] - basis[b].m[r][k] * basis[a].m[k][c];
          comm[r * nn + c] = v;
        }
      auto x = solve(coords, comm);
      if (!x) throw InternalError("sl(n): commutator escaped the basis span");
      StructureConstants::Terms terms;
      for (std::size_t k = 0; k < dim; ++k)
        if ((*x)[k] != 0) terms.emplace_back(k, (*x)[k]);
      sc.set(a, b, std::move(terms));
    }
  return LieAlgebra::validate(std::move(sc));
}

LieAlgebra build_abelian(int n) {
  return LieAlgebra::validate(StructureConstants(static_cast<std::size_t>(n)));
}

LieAlgebra build_heisenberg() {
  StructureConstants sc(3, {"x", "y", "z"});
  sc.set(0, 1, {{2, Rat(1)}});
  return LieAlgebra::validate(std::move(sc));
}

LieAlgebra build_twodim_nonabelian() {
  StructureConstants sc(2, {"x", "y"});
  sc.set(0, 1, {{1, Rat(1)}});
  return LieAlgebra::validate(std::move(sc));
}

LieAlgebra build_so3() {
  StructureConstants sc(3, {"x", "y", "z"});
  sc.set(0, 1, {{2, Rat(1)}});   // [x, y] = z
  sc.set(1, 2, {{0, Rat(1)}});   // [y, z] = x
  sc.set(2, 0, {{1, Rat(1)}});   // [z, x] = y
  return LieAlgebra::validate(std::move(sc));
}

// sl2 together with an abelian radical carrying the listed irreducible
// summands, optionally extended by a central element t acting as the identity
// on the whole radical.
LieAlgebra build_sl2_semidirect(const std::vector<int>& hws, bool scaling_element) {
  for (int m : hws)
    if (m < 0) throw BadRecipe("semidirect: module weights must be nonnegative");
  std::size_t rad_dim = 0;
  for (int m : hws) rad_dim += static_cast<std::size_t>(m) + 1;
  const std::size_t s = scaling_element ? 4 : 3;
  const std::size_t dim = s + rad_dim;

  std::vector<std::string> names{"e", "h", "f"};
  if (scaling_element) names.push_back("t");
  for (std::size_t c = 0; c < hws.size(); ++c)
    for (int i = 0; i <= hws[c]; ++i)
      names.push_back(hws.size() == 1 ? "v" + std::to_string(i)
                                      : "v" + std::to_string(c) + "_" + std::to_string(i));

  StructureConstants sc(dim, names);
  sc.set(1, 0, {{0, Rat(2)}});    // [h, e] = 2e
  sc.set(1, 2, {{2, Rat(-2)}});   // [h, f] = -2f
  sc.set(0, 2, {{1, Rat(1)}});    // [e, f] = h

  std::size_t off = s;
  for (int m : hws) {
    auto v = [&](int i) { return off + static_cast<std::size_t>(i); };
    for (int i = 0; i <= m; ++i) {
      if (m - 2 * i != 0) sc.set(1, v(i), {{v(i), Rat(m - 2 * i)}});      // [h, v_i]
      if (i >= 1) sc.set(0, v(i), {{v(i - 1), Rat(m - i + 1)}});          // [e, v_i]
      if (i < m) sc.set(2, v(i), {{v(i + 1), Rat(i + 1)}});               // [f, v_i]
      if (scaling_element) sc.set(3, v(i), {{v(i), Rat(1)}});             // [t, v_i] = v_i
    }
    off += static_cast<std::size_t>(m) + 1;
  }
  return LieAlgebra::validate(std::move(sc));
}

// sl2 with the Heisenberg radical generated by the natural module:
// [a, b] = z, z central, sl2 acting naturally on span{a, b}.
LieAlgebra build_sl2_heisenberg() {
  StructureConstants sc(6, {"e", "h", "f", "a", "b", "z"});
  sc.set(1, 0, {{0, Rat(2)}});
  sc.set(1, 2, {{2, Rat(-2)}});
  sc.set(0, 2, {{1, Rat(1)}});
  sc.set(1, 3, {{3, Rat(1)}});    // [h, a] = a
  sc.set(1, 4, {{4, Rat(-1)}});   // [h, b] = -b
  sc.set(0, 4, {{3, Rat(1)}});    // [e, b] = a
  sc.set(2, 3, {{4, Rat(1)}});    // [f, a] = b
  sc.set(3, 4, {{5, Rat(1)}});    // [a, b] = z
  return LieAlgebra::validate(std::move(sc));
}

LieAlgebra build_direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t da = a.dim(), db = b.dim();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < da; ++i) names.push_back("l." + a.name_of(i));
  for (std::size_t i = 0; i < db; ++i) names.push_back("r." + b.name_of(i));
  StructureConstants sc(da + db, names);
  for (const auto& [key, terms] : a.sc().table) sc.set(key.first, key.second, terms);
  for (const auto& [key, terms] : b.sc().table) {
    StructureConstants::Terms shifted;
    for (const auto& [k, c] : terms) shifted.emplace_back(k + da, c);
    sc.set(key.first + da, key.second + da, std::move(shifted));
  }
  return LieAlgebra::validate(std::move(sc));
}

LieAlgebra build(const Recipe& r) {
  switch (r.kind) {
    case Recipe::Kind::Sl: return build_sl(r.n);
    case Recipe::Kind::Abelian: return build_abelian(r.n);
    case Recipe::Kind::Heisenberg: return build_heisenberg();
    case Recipe::Kind::TwodimNonabelian: return build_twodim_nonabelian();
    case Recipe::Kind::So3: return build_so3();
    case Recipe::Kind::Sl2Heisenberg: return build_sl2_heisenberg();
    case Recipe::Kind::Semidirect: return build_sl2_semidirect(r.module, false);
    case Recipe::Kind::ScaleAction: return build_sl2_semidirect(r.children[0].module, true);
    case Recipe::Kind::DirectSum:
      return build_direct_sum(build(r.children[0]), build(r.children[1]));
  }
  throw BadRecipe("unknown recipe kind");
}

}  // namespace

LieAlgebra build_named(const std::string& recipe) {
  Parser p(recipe);
  return build(p.parse());
}

std::string normalize_recipe(const std::string& recipe) {
  Parser p(recipe);
  p.parse();  // validates
  return p.s;
}

}  // namespace liewild
