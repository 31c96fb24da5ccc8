#pragma once

#include <stdexcept>
#include <string>

namespace liewild {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

/// The Jacobi identity fails on a basis triple.
struct JacobiViolation : Error {
  int i, j, k;
  JacobiViolation(int i_, int j_, int k_, const std::string& residual)
      : Error("Jacobi identity fails on basis triple (" + std::to_string(i_) + "," +
              std::to_string(j_) + "," + std::to_string(k_) + "), residual " + residual),
        i(i_), j(j_), k(k_) {}
};

struct NotASubalgebra : Error {
  using Error::Error;
};

struct NotAnIdeal : Error {
  using Error::Error;
};

struct NotComplementary : Error {
  using Error::Error;
};

struct NotSemisimple : Error {
  using Error::Error;
};

/// A required ideal splitting would need an irrational eigenvalue.
struct NonSplit : Error {
  using Error::Error;
};

struct NonDominant : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

struct BadRecipe : Error {
  using Error::Error;
};

/// An internal invariant failed: a bug in this library, never a user error.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace liewild
