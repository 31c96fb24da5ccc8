#pragma once

#include <json.hpp>

#include "liewild/lie_algebra.hpp"

namespace liewild {

/// Algebra document read from JSON. Schema:
/// { "name": text, "dim": n, "basis": [labels...],
///   "brackets": [ { "left": label, "right": label,
///                   "result": [ { "basis": label, "coeff": "p/q" }... ] }... ] }
struct AlgebraDocument {
  std::string name;
  LieAlgebra algebra;
};

/// Parses and validates. ParseError for malformed JSON, unknown labels or bad
/// rationals; ValidationError for antisymmetry/duplicate/Jacobi failures.
AlgebraDocument parse_algebra(const std::string& text);
AlgebraDocument parse_algebra_doc(const nlohmann::json& doc);

/// Inverse of parse_algebra: parse_algebra(to_document(x)) round-trips.
nlohmann::json to_document(const LieAlgebra& l, const std::string& name);

}  // namespace liewild
