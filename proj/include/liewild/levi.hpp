#pragma once

#include "liewild/lie_algebra.hpp"

namespace liewild {

/// Semisimple complement of the radical (Levi subalgebra).
///
/// Starts from the deterministic linear complement of R and corrects it
/// stage by stage along the derived series R, [R,R], [[R,R],[R,R]], ...,
/// at each stage solving the linear system that kills the bracket defect
/// modulo the next stage. Existence is guaranteed in characteristic zero,
/// so an unsolvable defect system raises InternalError.
Subspace levi_subalgebra(const LieAlgebra& l);

/// True iff [part, rest] = 0. Both arguments must be subalgebras with
/// trivial intersection spanning l; otherwise NotComplementary.
bool is_direct_summand(const LieAlgebra& l, const Subspace& part, const Subspace& rest);

}  // namespace liewild
