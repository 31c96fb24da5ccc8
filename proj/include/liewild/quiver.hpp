#pragma once

#include <optional>
#include <set>

#include "liewild/rep_theory.hpp"

namespace liewild::quiver {

using rep::CartanDatum;
using rep::IrrLabel;
using rep::ModuleDesc;
using rep::Weight;

/// Finite truncation of the quiver K_I. Vertices are irreducible modules; the
/// arrow multiplicity of M -> N is the multiplicity of N in I (x) M, and the
/// relation count at target m from source i is the multiplicity of M_m in
/// (I wedge I) (x) M_i. Vertices discovered at exactly the last layer are
/// boundary: their out-arrows (and relation data) may be truncated.
struct QuiverWindow {
  CartanDatum datum;
  ModuleDesc module;
  std::vector<IrrLabel> vertices;  // breadth-first, lex tie-break inside a layer
  std::map<std::pair<std::size_t, std::size_t>, long> arrows;
  std::map<std::size_t, std::vector<std::pair<std::size_t, long>>> relations;
  std::set<std::size_t> boundary;
};

QuiverWindow build_quiver(const CartanDatum& d, const ModuleDesc& i,
                          std::vector<IrrLabel> seeds, int depth);

enum class WildRule {
  FiveComponents,
  MultiplicityThree,
  TwoPlusOne,
  LargeModule,
  BigRadicalDim,
  DecomposableTwoDim,
};

std::string wild_rule_name(WildRule rule);

struct WildWitness {
  WildRule rule;
  IrrLabel at_vertex;
  std::string detail;
};

struct DetectOptions {
  int window = 8;
  // The dimension rule subsumes the scan-based rules; tests switch it off to
  // exercise the large-module detector on modules of dimension >= 3.
  bool enable_big_radical_dim = true;
};

/// Scans dominant weights with coordinates <= window for a wildness trigger.
/// An absent result is NOT a tameness certificate; that conclusion belongs to
/// the classifier.
std::optional<WildWitness> detect_wild(const CartanDatum& d, const ModuleDesc& i,
                                       int window);
std::optional<WildWitness> detect_wild(const CartanDatum& d, const ModuleDesc& i,
                                       const DetectOptions& opts);

/// Re-verifies the witness' arithmetic condition against rep_theory.
bool verify_witness(const CartanDatum& d, const ModuleDesc& i, const WildWitness& w);

/// Graphviz digraph, deterministic byte-for-byte for equal windows.
std::string emit_dot(const QuiverWindow& q);

}  // namespace liewild::quiver
