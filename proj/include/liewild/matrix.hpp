#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liewild/errors.hpp"
#include "liewild/rational.hpp"

namespace liewild {

using Vec = std::vector<Rat>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& a);
bool vec_is_zero(const Vec& a);
std::string vec_str(const Vec& a);

/// Dense matrix over the exact rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  void set_row(std::size_t i, const Vec& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Rat& c) const;

  /// Matrix-vector product m * x with x a column vector.
  Vec apply(const Vec& x) const;

  bool is_zero() const;
  Rat trace() const;

  bool operator==(const Matrix& rhs) const = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form: unique, pivots scaled to 1, zeros above and below.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}. Vectors are exact; count = cols - rank.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Exact solution of a x = b, or nullopt when b is outside the column space.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Inverse, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);

/// Characteristic polynomial coefficients c with det(xI - m) = sum c[k] x^k,
/// c.size() = n + 1, c[n] = 1. Faddeev-LeVerrier, exact.
std::vector<Rat> char_poly(const Matrix& m);

/// Minimal polynomial of m (monic), via Krylov chains over all unit vectors.
std::vector<Rat> min_poly(const Matrix& m);

/// All rational roots of the polynomial sum c[k] x^k with rational coefficients.
std::vector<Rat> rational_roots(const std::vector<Rat>& coeffs);

}  // namespace liewild
