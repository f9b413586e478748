#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "resolv/field.hpp"

namespace resolv {

/// Column subsets are bit-packed: bit e set means coordinate e is present.
using Support = std::uint64_t;

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(FiniteField field, std::size_t rows, std::size_t cols);
  static Matrix from_rows(FiniteField field, const std::vector<std::vector<FieldElement>>& rows);
  static Matrix identity(FiniteField field, std::size_t n);

  const FiniteField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<FieldElement> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::vector<FieldElement> column(std::size_t c) const;
  std::vector<std::vector<FieldElement>> to_rows() const;

  Matrix transpose() const;
  Matrix select_columns(std::span<const std::size_t> columns) const;
  Matrix select_columns(Support columns) const;
  Matrix select_rows(std::size_t first, std::size_t count) const;
  /// Appends rows of other below this matrix.
  Matrix stacked(const Matrix& other) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FiniteField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form (zero rows kept at the bottom).
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Rank of the columns of m selected by a bit mask (cols() <= 64).
std::size_t column_rank(const Matrix& m, Support columns);
/// Rows form a basis of {x : m x^T = 0}; one row per free column, in
/// increasing free-column order.
Matrix kernel_basis(const Matrix& m);
/// Nonzero rows of rref(m).
Matrix row_space_basis(const Matrix& m);

/// Row-vector times matrix: x (1 x rows) * m.
std::vector<FieldElement> left_multiply(std::span<const FieldElement> x, const Matrix& m);
Support support_of(std::span<const FieldElement> v);

/// Streams every dim-dimensional subspace of F^ambient exactly once as an
/// RREF basis (dim x ambient). Order: pivot profiles lexicographically, then
/// the free entries as a base-q odometer with the earliest entry most
/// significant. Returns the number of subspaces visited.
std::uint64_t for_each_subspace(const FiniteField& field, std::size_t ambient, std::size_t dim,
                                const std::function<void(const Matrix&)>& visit);
std::vector<Matrix> enumerate_subspaces(const FiniteField& field, std::size_t ambient, std::size_t dim);

}  // namespace resolv
