#include "hocolim/ratlin.hpp"

#include <sstream>
#include <stdexcept>

namespace ratlin {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(text));
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

std::string rational_to_string(const Rational& value) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(value);
  if (boost::multiprecision::denominator(value) != 1)
    out << "/" << boost::multiprecision::denominator(value);
  return out.str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("matrix entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs(k, j);
        if (b != 0) out(i, j) += a * b;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] - rhs.entries_[i];
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
  return out;
}

Matrix Matrix::operator*(const Rational& scalar) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * scalar;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
  if (r1 < r0 || c1 < c0 || r1 > rows_ || c1 > cols_)
    throw std::invalid_argument("bad block bounds");
  Matrix out(r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) out(i - r0, j - c0) = (*this)(i, j);
  return out;
}

Matrix Matrix::hstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) return Matrix();
  std::size_t rows = parts.front().rows(), cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw std::invalid_argument("hstack row mismatch");
    cols += p.cols();
  }
  Matrix out(rows, cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) out(i, off + j) = p(i, j);
    off += p.cols();
  }
  return out;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) return Matrix();
  std::size_t cols = parts.front().cols(), rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw std::invalid_argument("vstack column mismatch");
    rows += p.rows();
  }
  Matrix out(rows, cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) out(off + i, j) = p(i, j);
    off += p.rows();
  }
  return out;
}

Matrix Matrix::diag(const std::vector<Matrix>& parts) {
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) {
    rows += p.rows();
    cols += p.cols();
  }
  Matrix out(rows, cols);
  std::size_t ro = 0, co = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) out(ro + i, co + j) = p(i, j);
    ro += p.rows();
    co += p.cols();
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ", ";
      out << rational_to_string((*this)(i, j));
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.reduced = m;
  Matrix& a = res.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    // Leftmost nonzero column, topmost nonzero row.
    std::size_t pivot_row = row;
    while (pivot_row < a.rows() && a(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == a.rows()) continue;
    if (pivot_row != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(pivot_row, j));
    const Rational inv = Rational(1) / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Rational factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = res.pivots.size();
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  const RrefResult r = rref(m);
  std::vector<std::size_t> free_cols;
  {
    std::size_t p = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (p < r.pivots.size() && r.pivots[p] == j)
        ++p;
      else
        free_cols.push_back(j);
    }
  }
  Matrix out(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t j = free_cols[k];
    out(j, k) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) out(r.pivots[i], k) = -r.reduced(i, j);
  }
  return out;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  const Matrix aug = Matrix::hstack({m, b});
  const RrefResult r = rref(aug);
  for (std::size_t p : r.pivots)
    if (p >= m.cols()) return std::nullopt;
  Matrix x(m.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.reduced(i, m.cols() + j);
  return x;
}

QuotientBasis quotient_basis(const Matrix& sub, std::size_t ambient_dim) {
  if (sub.rows() != ambient_dim)
    throw std::invalid_argument("quotient_basis: sub rows must equal ambient_dim");
  const RrefResult r = rref(sub.transpose());
  std::vector<std::size_t> complement;
  {
    std::size_t p = 0;
    for (std::size_t j = 0; j < ambient_dim; ++j) {
      if (p < r.pivots.size() && r.pivots[p] == j)
        ++p;
      else
        complement.push_back(j);
    }
  }
  QuotientBasis out;
  out.section = Matrix(ambient_dim, complement.size());
  for (std::size_t k = 0; k < complement.size(); ++k) out.section(complement[k], k) = 1;
  // Kill the pivot coordinates with the canonical rref rows, then read off the
  // complement coordinates; this is exact projection along the subspace.
  out.projection = Matrix(complement.size(), ambient_dim);
  for (std::size_t k = 0; k < complement.size(); ++k) {
    const std::size_t c = complement[k];
    out.projection(k, c) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      out.projection(k, r.pivots[i]) = -r.reduced(i, c);
  }
  return out;
}

}  // namespace ratlin
