#pragma once

#include <map>

#include "liewild/cartan.hpp"

namespace liewild::rep {

/// Dominant highest weight naming an irreducible module.
using IrrLabel = Weight;

/// Completely reducible module as a multiset of irreducibles.
using ModuleDesc = std::map<IrrLabel, long>;

bool is_dominant(const Weight& w);

/// Renders fundamental coordinates, factors separated by ';': "(1)", "(1,0;2)".
std::string weight_str(const CartanDatum& d, const Weight& w);

/// Weyl dimension formula, multiplied across factors. Throws NonDominant.
Int weyl_dim(const CartanDatum& d, const IrrLabel& hw);

/// Full weight system with multiplicities (Freudenthal recursion).
/// Sum of multiplicities equals weyl_dim. Throws NonDominant.
std::map<Weight, long> weight_multiplicities(const CartanDatum& d, const IrrLabel& hw);

/// Tensor product of irreducibles, decomposed into irreducibles
/// (Klimyk's formula over the weight system of the smaller factor).
ModuleDesc tensor_decompose(const CartanDatum& d, const IrrLabel& a, const IrrLabel& b);

/// i (x) V(m) for a completely reducible i.
ModuleDesc tensor_module(const CartanDatum& d, const ModuleDesc& i, const IrrLabel& m);

Int module_dim(const CartanDatum& d, const ModuleDesc& m);

struct SquareParts {
  ModuleDesc alt;
  ModuleDesc sym;
};

/// Alternating and symmetric square of a completely reducible module,
/// computed from pairwise sums of distinct-slot weight pairs of its character.
SquareParts alt_sym_square(const CartanDatum& d, const ModuleDesc& m);

/// Decomposes a genuine character (weight multiset of some module) into
/// irreducibles by repeatedly peeling the highest remaining weight.
ModuleDesc peel_character(const CartanDatum& d, std::map<Weight, long> character);

/// Simple reflection applied to a concatenated weight; `i` indexes the simple
/// root within factor `f`.
Weight reflect_simple(const CartanDatum& d, const Weight& w, std::size_t f, int i);

}  // namespace liewild::rep
