#pragma once

#include <optional>

#include "liewild/levi.hpp"

namespace liewild {

enum class WildReason {
  Solvable,               // solvable of dimension >= 2
  NonabelianRadical,      // [R,R] != 0 with dim R/[R,R] >= 2
  OneDimIdentityAction,   // [R,R] != 0 with dim R/[R,R] == 1
  DecomposableTwoDim,     // two-dimensional abelian radical with trivial action
  RadicalDimAtLeast3,     // abelian radical of dimension >= 3
  TwoDimActionNotSl2,     // guard: acting part is not a single split sl2
};

struct Verdict {
  enum class Kind { Tame, Wild, Unsupported } kind = Kind::Unsupported;
  int tame_class = 0;    // 1..5 when Tame
  WildReason reason{};   // when Wild
  bool controlled = true;
  std::string witness;   // evidence text when Wild
  std::string cause;     // when Unsupported

  static Verdict tame(int cls);
  static Verdict wild(WildReason reason, std::string witness);
  static Verdict unsupported(std::string cause);

  bool is_tame() const { return kind == Kind::Tame; }
  bool is_wild() const { return kind == Kind::Wild; }
};

struct Sl2Triple {
  Vec h, e, f;  // ambient coordinates; [h,e] = 2e, [h,f] = -2f, [e,f] = h
};

/// Rational sl2 recognition inside a three-dimensional subalgebra: bounded
/// search for an element whose adjoint map has a nonzero rational eigenvalue,
/// then eigenvector extraction and scaling. Returns nullopt when no rational
/// split is found, in particular for anisotropic forms (so3 over Q).
std::optional<Sl2Triple> find_sl2_triple(const LieAlgebra& l, const Subspace& c);

/// Verdict for the branch where a two-dimensional abelian radical carries an
/// irreducible action of the ideal `acting`. When the 2x2 action matrices of
/// the basis rows of `acting` are supplied, recognition pulls the standard
/// basis back through them (complete over Q); otherwise the bounded abstract
/// search above runs, and a miss is reported as Unsupported, never as a wrong
/// tame/wild claim.
Verdict resolve_two_dim_irreducible(const LieAlgebra& l, const Subspace& acting,
                                    const std::vector<Matrix>* action,
                                    bool has_kernel_part);

/// The decision procedure: structure constants in, tame class 1..5, wildness
/// reason, or Unsupported out.
Verdict classify(const LieAlgebra& l);

/// One-paragraph human-readable justification naming the rule used.
std::string explain(const Verdict& v);

/// Stable machine identifier of the rule behind a verdict.
std::string rule_id(const Verdict& v);

}  // namespace liewild
