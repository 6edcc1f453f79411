#pragma once

#include <optional>
#include <span>
#include <vector>

#include "golodlab/field.hpp"

namespace golod {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
bool is_zero(std::span<const Scalar> v);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& f, std::size_t n);
  /// Matrix whose columns are the given vectors (each of length `rows`).
  static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& columns);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Matrix transpose() const;
  Vector apply(std::span<const Scalar> x) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

/// One solution of m x = b (free variables set to zero), or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);
/// Basis of {x : m x = 0}, one vector per free column in increasing order.
std::vector<Vector> nullspace(const Matrix& m);
bool in_column_space(const Matrix& m, std::span<const Scalar> b);

/// Column indices of a maximal linearly independent prefix-greedy subset of columns.
std::vector<std::size_t> independent_columns(const Matrix& m);

}  // namespace golod
