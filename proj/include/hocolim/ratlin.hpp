#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ratlin {

using Int = boost::multiprecision::cpp_int;
// Canonical form (reduced, denominator > 0) is maintained by the backend.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or "p"; throws std::invalid_argument on malformed input or q == 0.
Rational parse_rational(const std::string& text);
// Prints "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const Rational& value);

// Dense matrix of exact rationals, row-major. Maps act on column vectors.
// Zero-sized shapes (0xN, Nx0) are valid and arise routinely as chain-complex
// components outside a complex's support.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool operator==(const Matrix& other) const = default;

  bool is_zero() const;
  bool is_identity() const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix operator*(const Rational& scalar) const;

  Matrix transpose() const;

  // Rows [r0, r1) and columns [c0, c1).
  Matrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;

  static Matrix hstack(const std::vector<Matrix>& parts);
  static Matrix vstack(const std::vector<Matrix>& parts);
  // Block diagonal.
  static Matrix diag(const std::vector<Matrix>& parts);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
  std::size_t rank = 0;
};

// Unique reduced row-echelon form. Pivoting is deterministic: leftmost nonzero
// column, topmost nonzero row.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Columns form a basis of ker(m); cols = cols(m) - rank(m).
Matrix kernel_basis(const Matrix& m);

// Exact solution of m*x = b (b may have several columns; all must be
// consistent). Returns nullopt iff some column of b is outside the column
// span of m. Free variables are set to zero.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

struct QuotientBasis {
  Matrix projection;  // (ambient - rank) x ambient, projection * sub = 0
  Matrix section;     // ambient x (ambient - rank), projection * section = id
};

// Quotient of the ambient space by the column span of `sub`. The quotient
// coordinates are the non-pivot standard coordinates of rref(sub^T), lowest
// indices first, so the basis choice is deterministic.
QuotientBasis quotient_basis(const Matrix& sub, std::size_t ambient_dim);

}  // namespace ratlin
