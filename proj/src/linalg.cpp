#include "shc/linalg.hpp"

namespace shc {

KMatrix::KMatrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

KMatrix KMatrix::identity(Field f, std::size_t n) {
  KMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

KMatrix KMatrix::operator*(const KMatrix& o) const {
  if (cols_ != o.rows_ || field_ != o.field_) throw StructureError("KMatrix shape mismatch");
  KMatrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  }
  return r;
}

KMatrix KMatrix::operator+(const KMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) throw StructureError("KMatrix shape mismatch");
  KMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

KMatrix KMatrix::operator-(const KMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) throw StructureError("KMatrix shape mismatch");
  KMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
  return r;
}

KMatrix KMatrix::operator*(const Scalar& s) const {
  KMatrix r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

bool KMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

namespace {

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> row_reduce(KMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(piv, j));
    const Scalar inv = m(row, col).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Scalar f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t KMatrix::rank() const {
  KMatrix copy = *this;
  return row_reduce(copy).size();
}

KMatrix KMatrix::inverse() const {
  if (rows_ != cols_) throw NotInvertible("non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return KMatrix(field_, 0, 0);
  KMatrix aug(field_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = Scalar::one(field_);
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw NotInvertible("singular matrix over " + field_.name());
  KMatrix inv(field_, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

SpanSolver::SpanSolver(Field f, std::size_t dim, const std::vector<std::vector<Scalar>>& columns)
    : field_(f), dim_(dim), columns_(columns) {
  const std::size_t r = columns.size();
  for (const auto& c : columns) {
    if (c.size() != dim) throw StructureError("span solver: column length mismatch");
  }
  // Pick r independent rows greedily by reducing the transpose.
  KMatrix t(f, r, dim);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < dim; ++i) t(j, i) = columns[j][i];
  }
  pivot_rows_ = row_reduce(t);
  if (pivot_rows_.size() != r) throw StructureError("span solver: columns are linearly dependent");
  KMatrix sel(f, r, r);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t j = 0; j < r; ++j) sel(a, j) = columns[j][pivot_rows_[a]];
  }
  selected_inverse_ = sel.inverse();
}

std::optional<std::vector<Scalar>> SpanSolver::solve(const std::vector<Scalar>& w) const {
  if (w.size() != dim_) throw StructureError("span solver: vector length mismatch");
  const std::size_t r = columns_.size();
  std::vector<Scalar> c(r, Scalar::zero(field_));
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t a = 0; a < r; ++a) c[j] += selected_inverse_(j, a) * w[pivot_rows_[a]];
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    Scalar v = w[i];
    for (std::size_t j = 0; j < r; ++j) v -= c[j] * columns_[j][i];
    if (!v.is_zero()) return std::nullopt;
  }
  return c;
}

std::optional<std::vector<Coeff>> SpanSolver::solve(const std::vector<Coeff>& w) const {
  if (w.size() != dim_) throw StructureError("span solver: vector length mismatch");
  if (w.empty()) return std::vector<Coeff>{};
  const CoeffAlgebra& alg = w[0].algebra();
  const std::size_t r = columns_.size();
  std::vector<Coeff> c(r, alg.zero());
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t a = 0; a < r; ++a) {
      const Scalar& s = selected_inverse_(j, a);
      if (!s.is_zero()) c[j] += w[pivot_rows_[a]] * s;
    }
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    Coeff v = w[i];
    for (std::size_t j = 0; j < r; ++j) {
      if (!columns_[j][i].is_zero()) v -= c[j] * columns_[j][i];
    }
    if (!v.is_zero()) return std::nullopt;
  }
  return c;
}

}  // namespace shc
