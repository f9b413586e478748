#include "resolv/matrix.hpp"

#include <bit>
#include <string>

#include "resolv/error.hpp"

namespace resolv {

Matrix::Matrix(FiniteField field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(FiniteField field, const std::vector<std::vector<FieldElement>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::InvalidParameters, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!field.contains(rows[r][c]))
        throw Error(ErrorKind::InvalidParameters, "entry " + std::to_string(rows[r][c]) + " not in field");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::identity(FiniteField field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<FieldElement> Matrix::column(std::size_t c) const {
  std::vector<FieldElement> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<std::vector<FieldElement>> Matrix::to_rows() const {
  std::vector<std::vector<FieldElement>> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
  Matrix out(field_, rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < columns.size(); ++j) out(r, j) = (*this)(r, columns[j]);
  return out;
}

Matrix Matrix::select_columns(Support columns) const {
  std::vector<std::size_t> idx;
  for (std::size_t c = 0; c < cols_ && c < 64; ++c)
    if ((columns >> c) & 1u) idx.push_back(c);
  return select_columns(idx);
}

Matrix Matrix::select_rows(std::size_t first, std::size_t count) const {
  Matrix out(field_, count, cols_);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(first + r, c);
  return out;
}

Matrix Matrix::stacked(const Matrix& other) const {
  if (other.cols_ != cols_ && rows_ != 0 && other.rows_ != 0)
    throw Error(ErrorKind::InvalidParameters, "column mismatch in stack");
  const std::size_t cols = rows_ ? cols_ : other.cols_;
  Matrix out(field_, rows_ + other.rows_, cols);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(r, c);
  for (std::size_t r = 0; r < other.rows_; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(rows_ + r, c) = other(r, c);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidParameters, "dimension mismatch in product");
  const auto& F = a.field();
  Matrix out(F, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const FieldElement s = a(i, l);
      if (s == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = F.add(out(i, j), F.mul(s, b(l, j)));
    }
  }
  return out;
}

namespace {

// In-place Gauss-Jordan elimination; returns pivot columns.
std::vector<std::size_t> eliminate(Matrix& m) {
  const auto& F = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const FieldElement scale = F.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = F.mul(m(row, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const FieldElement f = m(r, col);
      if (f == 0) continue;
      const FieldElement nf = F.neg(f);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (m(row, c) != 0) m(r, c) = F.add(m(r, c), F.mul(nf, m(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RowEchelon rref(const Matrix& m) {
  RowEchelon out{m, 0, {}};
  out.pivots = eliminate(out.reduced);
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank(const Matrix& m) {
  // Forward elimination only.
  Matrix a = m;
  const auto& F = a.field();
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row)
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    const FieldElement inv = F.inv(a(row, col));
    for (std::size_t r = row + 1; r < a.rows(); ++r) {
      const FieldElement f = a(r, col);
      if (f == 0) continue;
      const FieldElement nf = F.neg(F.mul(f, inv));
      for (std::size_t c = col; c < a.cols(); ++c)
        if (a(row, c) != 0) a(r, c) = F.add(a(r, c), F.mul(nf, a(row, c)));
    }
    ++row;
  }
  return row;
}

std::size_t column_rank(const Matrix& m, Support columns) {
  if (columns == 0 || m.rows() == 0) return 0;
  // Columns become rows; a transposed layout keeps the elimination short.
  const auto& F = m.field();
  const std::size_t count = static_cast<std::size_t>(std::popcount(columns));
  Matrix a(F, count, m.rows());
  std::size_t i = 0;
  for (Support s = columns; s; s &= s - 1, ++i) {
    const auto c = static_cast<std::size_t>(std::countr_zero(s));
    for (std::size_t r = 0; r < m.rows(); ++r) a(i, r) = m(r, c);
  }
  return rank(a);
}

Matrix kernel_basis(const Matrix& m) {
  const auto& F = m.field();
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  Matrix k(F, m.cols() - e.rank, m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    k(out, free) = 1;
    for (std::size_t r = 0; r < e.rank; ++r) k(out, e.pivots[r]) = F.neg(e.reduced(r, free));
    ++out;
  }
  return k;
}

Matrix row_space_basis(const Matrix& m) {
  const RowEchelon e = rref(m);
  return e.reduced.select_rows(0, e.rank);
}

std::vector<FieldElement> left_multiply(std::span<const FieldElement> x, const Matrix& m) {
  const auto& F = m.field();
  std::vector<FieldElement> out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (x[r] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] = F.add(out[c], F.mul(x[r], m(r, c)));
  }
  return out;
}

Support support_of(std::span<const FieldElement> v) {
  Support s = 0;
  for (std::size_t i = 0; i < v.size() && i < 64; ++i)
    if (v[i] != 0) s |= Support{1} << i;
  return s;
}

std::uint64_t for_each_subspace(const FiniteField& field, std::size_t ambient, std::size_t dim,
                                const std::function<void(const Matrix&)>& visit) {
  if (dim > ambient) throw Error(ErrorKind::InvalidParameters, "subspace dimension exceeds ambient");
  const std::uint32_t q = field.order();
  std::uint64_t visited = 0;
  std::vector<std::size_t> pivots(dim);
  for (std::size_t i = 0; i < dim; ++i) pivots[i] = i;
  Matrix basis(field, dim, ambient);
  while (true) {
    // Free positions for this pivot profile: right of the row pivot, not a pivot column.
    std::vector<bool> pivot_col(ambient, false);
    for (std::size_t p : pivots) pivot_col[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = pivots[r] + 1; c < ambient; ++c)
        if (!pivot_col[c]) free.emplace_back(r, c);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < ambient; ++c) basis(r, c) = (c == pivots[r]) ? 1 : 0;
    std::vector<FieldElement> digits(free.size(), 0);
    while (true) {
      visit(basis);
      ++visited;
      // Odometer with the last free entry least significant.
      std::size_t pos = free.size();
      while (pos > 0) {
        --pos;
        if (++digits[pos] < q) break;
        digits[pos] = 0;
        basis(free[pos].first, free[pos].second) = 0;
        if (pos == 0) {
          pos = free.size() + 1;
          break;
        }
      }
      if (free.empty() || pos == free.size() + 1) break;
      basis(free[pos].first, free[pos].second) = digits[pos];
    }
    // Next pivot combination in lexicographic order.
    std::size_t i = dim;
    while (i > 0 && pivots[i - 1] == ambient - dim + (i - 1)) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < dim; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return visited;
}

std::vector<Matrix> enumerate_subspaces(const FiniteField& field, std::size_t ambient, std::size_t dim) {
  std::vector<Matrix> out;
  for_each_subspace(field, ambient, dim, [&](const Matrix& m) { out.push_back(m); });
  return out;
}

}  // namespace resolv
