#include "golodlab/matrix.hpp"

#include "golodlab/errors.hpp"

namespace golod {

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(f, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DomainError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw DomainError("dimension mismatch in matrix-vector product");
  Vector y = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero() && !x[c].is_zero()) y[r] += a * x[c];
    }
  return y;
}

bool Matrix::is_zero() const { return golod::is_zero(data_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("dimension mismatch in matrix product");
  Matrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("dimension mismatch in matrix sum");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("dimension mismatch in matrix difference");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RrefResult rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw DomainError("dimension mismatch in solve");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RrefResult red = rref(std::move(aug));
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < red.pivots.size(); ++r) x[red.pivots[r]] = red.reduced(r, m.cols());
  return x;
}

std::vector<Vector> nullspace(const Matrix& m) {
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = m.field().one();
    for (std::size_t r = 0; r < red.pivots.size(); ++r) v[red.pivots[r]] = -red.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_column_space(const Matrix& m, std::span<const Scalar> b) { return solve(m, b).has_value(); }

std::vector<std::size_t> independent_columns(const Matrix& m) { return rref(m).pivots; }

}  // namespace golod
