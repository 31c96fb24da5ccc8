#pragma once

#include "liewild/lie_algebra.hpp"

namespace liewild {

/// Builds an algebra from a recipe string. Grammar:
///
///   recipe := sl(n) | abelian(n) | heisenberg | twodim_nonabelian | so3
///           | sl2_heisenberg
///           | semidirect(recipe, module)     -- base must be sl(2)
///           | direct_sum(recipe, recipe)
///           | scale_action(semidirect(...))  -- adds a central scaling element
///   module := hw weights, weights := w ('+' w)*, w := int | '(' int ')'
///
/// Examples: "sl(3)", "semidirect(sl(2), hw(1))", "semidirect(sl(2), hw(0)+(0))",
/// "direct_sum(sl(3), semidirect(sl(2), hw(1)))", "scale_action(semidirect(sl(2), hw(1)))".
/// Throws BadRecipe on malformed or unsupported recipes.
LieAlgebra build_named(const std::string& recipe);

/// Normalized spelling of a parsed recipe (whitespace stripped).
std::string normalize_recipe(const std::string& recipe);

}  // namespace liewild
