#pragma once

// Exact dense linear algebra over the ground field.

#include <optional>
#include <vector>

#include "shc/coeff.hpp"

namespace shc {

class KMatrix {
 public:
  KMatrix() = default;
  KMatrix(Field f, std::size_t rows, std::size_t cols);
  static KMatrix identity(Field f, std::size_t n);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  KMatrix operator*(const KMatrix& o) const;
  KMatrix operator+(const KMatrix& o) const;
  KMatrix operator-(const KMatrix& o) const;
  KMatrix operator*(const Scalar& s) const;
  bool is_zero() const;
  bool operator==(const KMatrix& o) const = default;

  std::size_t rank() const;
  /// Throws NotInvertible for singular (or non-square) input.
  KMatrix inverse() const;

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Expresses vectors in the span of fixed, linearly independent columns
/// v_1..v_r of k^n. Precomputes an invertible r x r row selection so that
/// coordinates cost one small product plus a residual check.
class SpanSolver {
 public:
  SpanSolver() = default;
  /// Throws StructureError when the columns are dependent.
  SpanSolver(Field f, std::size_t dim, const std::vector<std::vector<Scalar>>& columns);

  std::size_t size() const { return columns_.size(); }
  std::size_t dim() const { return dim_; }

  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& w) const;
  /// Coefficient-algebra version: w has entries in A, the coordinates are
  /// A-linear combinations. Empty when the residual is nonzero.
  std::optional<std::vector<Coeff>> solve(const std::vector<Coeff>& w) const;

 private:
  Field field_;
  std::size_t dim_ = 0;
  std::vector<std::vector<Scalar>> columns_;
  std::vector<std::size_t> pivot_rows_;
  KMatrix selected_inverse_;
};

}  // namespace shc
