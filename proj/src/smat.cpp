#include "shc/smat.hpp"

#include <sstream>

namespace shc {

SuperMatrix::SuperMatrix(const CoeffAlgebra& alg, int p, int q)
    : alg_(alg), p_(p), q_(q), entries_(static_cast<std::size_t>((p + q) * (p + q)), alg.zero()) {
  if (p < 0 || q < 0) throw StructureError("negative block size");
}

SuperMatrix SuperMatrix::identity(const CoeffAlgebra& alg, int p, int q) {
  SuperMatrix m(alg, p, q);
  for (int i = 0; i < p + q; ++i) m(i, i) = alg.one();
  return m;
}

SuperMatrix SuperMatrix::elementary(const CoeffAlgebra& alg, int p, int q, int i, int j) {
  SuperMatrix m(alg, p, q);
  if (i < 0 || j < 0 || i >= p + q || j >= p + q) throw StructureError("E_ij index out of range");
  m(i, j) = alg.one();
  return m;
}

SuperMatrix SuperMatrix::from_scalars(const CoeffAlgebra& alg, int p, int q, const KMatrix& k) {
  if (k.rows() != static_cast<std::size_t>(p + q) || k.cols() != static_cast<std::size_t>(p + q)) {
    throw StructureError("scalar matrix has wrong size");
  }
  SuperMatrix m(alg, p, q);
  for (int i = 0; i < p + q; ++i) {
    for (int j = 0; j < p + q; ++j) m(i, j) = alg.constant(k(i, j));
  }
  return m;
}

void SuperMatrix::require_same(const SuperMatrix& o) const {
  if (p_ != o.p_ || q_ != o.q_) throw StructureError("supermatrix shape mismatch");
  if (alg_ != o.alg_) throw StructureError("supermatrix coefficient algebra mismatch");
}

SuperMatrix SuperMatrix::operator+(const SuperMatrix& o) const {
  require_same(o);
  SuperMatrix r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += o.entries_[k];
  return r;
}

SuperMatrix SuperMatrix::operator-(const SuperMatrix& o) const {
  require_same(o);
  SuperMatrix r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= o.entries_[k];
  return r;
}

SuperMatrix SuperMatrix::operator-() const {
  SuperMatrix r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

SuperMatrix SuperMatrix::operator*(const SuperMatrix& o) const {
  require_same(o);
  const int n = size();
  SuperMatrix r(alg_, p_, q_);
  // Flipped copies of the right factor's entries, used when |i| != |j|.
  std::vector<Coeff> flipped(o.entries_.size());
  for (std::size_t k = 0; k < o.entries_.size(); ++k) flipped[k] = o.entries_[k].flip();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Coeff& m = (*this)(i, j);
      if (m.is_zero()) continue;
      const bool twist = position_parity(i) != position_parity(j);
      for (int k = 0; k < n; ++k) {
        const Coeff& nk = twist ? flipped[static_cast<std::size_t>(j * n + k)] : o(j, k);
        if (nk.is_zero()) continue;
        r(i, k) += m * nk;
      }
    }
  }
  return r;
}

SuperMatrix SuperMatrix::scaled(const Coeff& a) const {
  SuperMatrix r = *this;
  for (auto& e : r.entries_) e = a * e;
  return r;
}

SuperMatrix SuperMatrix::scaled(const Scalar& s) const {
  SuperMatrix r = *this;
  for (auto& e : r.entries_) e = e * s;
  return r;
}

bool SuperMatrix::is_even_homogeneous() const {
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      const bool odd_slot = position_parity(i) != position_parity(j);
      if (odd_slot ? !(*this)(i, j).is_odd() : !(*this)(i, j).is_even()) return false;
    }
  }
  return true;
}

bool SuperMatrix::is_odd_homogeneous() const {
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      const bool odd_slot = position_parity(i) != position_parity(j);
      if (odd_slot ? !(*this)(i, j).is_even() : !(*this)(i, j).is_odd()) return false;
    }
  }
  return true;
}

bool SuperMatrix::is_even_block_diagonal() const {
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      const Coeff& e = (*this)(i, j);
      if (position_parity(i) != position_parity(j)) {
        if (!e.is_zero()) return false;
      } else if (!e.is_even()) {
        return false;
      }
    }
  }
  return true;
}

SuperMatrix SuperMatrix::even_part() const {
  SuperMatrix r(alg_, p_, q_);
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      const bool odd_slot = position_parity(i) != position_parity(j);
      r(i, j) = odd_slot ? (*this)(i, j).odd_part() : (*this)(i, j).even_part();
    }
  }
  return r;
}

SuperMatrix SuperMatrix::odd_part() const { return *this - even_part(); }

std::optional<int> SuperMatrix::parity() const {
  if (is_even_homogeneous()) return 0;
  if (is_odd_homogeneous()) return 1;
  return std::nullopt;
}

KMatrix SuperMatrix::body() const {
  KMatrix k(alg_.field(), static_cast<std::size_t>(size()), static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) k(i, j) = (*this)(i, j).body();
  }
  return k;
}

SuperMatrix SuperMatrix::reduce_bar() const {
  SuperMatrix r = *this;
  for (auto& e : r.entries_) e = e.reduce_bar();
  return r;
}

SuperMatrix SuperMatrix::change_algebra(const CoeffAlgebra& target) const {
  SuperMatrix r(target, p_, q_);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k].change_algebra(target);
  return r;
}

bool SuperMatrix::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      const Coeff& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

bool SuperMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::vector<Coeff> SuperMatrix::apply(const std::vector<Coeff>& v) const {
  if (v.size() != static_cast<std::size_t>(size())) throw StructureError("vector length mismatch");
  std::vector<Coeff> out(v.size(), alg_.zero());
  std::vector<Coeff> flipped(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].algebra() != alg_) throw StructureError("vector coefficient algebra mismatch");
    flipped[j] = v[j].flip();
  }
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      const Coeff& m = (*this)(i, j);
      if (m.is_zero() || v[static_cast<std::size_t>(j)].is_zero()) continue;
      const bool twist = position_parity(i) != position_parity(j);
      out[static_cast<std::size_t>(i)] += m * (twist ? flipped[static_cast<std::size_t>(j)]
                                                     : v[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

bool SuperMatrix::operator==(const SuperMatrix& o) const {
  return p_ == o.p_ && q_ == o.q_ && alg_ == o.alg_ && entries_ == o.entries_;
}

std::string SuperMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < size(); ++i) {
    os << (i ? "; " : "") << "(";
    for (int j = 0; j < size(); ++j) {
      if (j == p_) os << " |";
      os << (j ? " " : "") << (*this)(i, j).to_string();
      if (j + 1 < size() && j + 1 != p_) os << ",";
    }
    os << ")";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- inversion

bool is_invertible(const SuperMatrix& m) {
  try {
    (void)m.body().inverse();
    return true;
  } catch (const NotInvertible&) {
    return false;
  }
}

SuperMatrix inverse(const SuperMatrix& m) {
  KMatrix body_inv;
  try {
    body_inv = m.body().inverse();
  } catch (const NotInvertible&) {
    throw NotInvertible("supermatrix body is singular over " + m.algebra().field().name());
  }
  const CoeffAlgebra& alg = m.algebra();
  const SuperMatrix b_inv = SuperMatrix::from_scalars(alg, m.p(), m.q(), body_inv);
  const SuperMatrix b = SuperMatrix::from_scalars(alg, m.p(), m.q(), m.body());
  const SuperMatrix step = -(b_inv * (m - b));
  SuperMatrix sum = SuperMatrix::identity(alg, m.p(), m.q());
  SuperMatrix power = sum;
  for (int s = 1; s <= alg.nilpotency_bound(); ++s) {
    power = power * step;
    if (power.is_zero()) break;
    sum = sum + power;
  }
  return sum * b_inv;
}

namespace {

// Square diagonal block as a purely even (n|0) matrix.
SuperMatrix block(const SuperMatrix& m, int r0, int c0, int rows) {
  SuperMatrix out(m.algebra(), rows, 0);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < rows; ++j) out(i, j) = m(r0 + i, c0 + j);
  }
  return out;
}

}  // namespace

GlFactors gl_split(const SuperMatrix& m) {
  if (!m.is_even_homogeneous()) throw StructureError("gl_split needs an even-homogeneous matrix");
  const int p = m.p(), q = m.q();
  const SuperMatrix a_inv = inverse(block(m, 0, 0, p));
  const SuperMatrix d_inv = inverse(block(m, p, p, q));
  GlFactors f{SuperMatrix(m.algebra(), p, q), SuperMatrix::identity(m.algebra(), p, q)};
  for (int i = 0; i < p + q; ++i) {
    for (int j = 0; j < p + q; ++j) {
      if (m.position_parity(i) == m.position_parity(j)) f.even(i, j) = m(i, j);
    }
  }
  // a^-1 beta and d^-1 gamma: a^-1, d^-1 have even entries, so the product
  // is the naive one.
  for (int i = 0; i < p; ++i) {
    for (int j = p; j < p + q; ++j) {
      Coeff s = m.algebra().zero();
      for (int k = 0; k < p; ++k) s += a_inv(i, k) * m(k, j);
      f.odd(i, j) = s;
    }
  }
  for (int i = p; i < p + q; ++i) {
    for (int j = 0; j < p; ++j) {
      Coeff s = m.algebra().zero();
      for (int k = p; k < p + q; ++k) s += d_inv(i - p, k - p) * m(k, j);
      f.odd(i, j) = s;
    }
  }
  return f;
}

GlFactors gl_split_left(const SuperMatrix& m) {
  if (!m.is_even_homogeneous()) throw StructureError("gl_split_left needs an even-homogeneous matrix");
  const int p = m.p(), q = m.q();
  const SuperMatrix a_inv = inverse(block(m, 0, 0, p));
  const SuperMatrix d_inv = inverse(block(m, p, p, q));
  GlFactors f{SuperMatrix(m.algebra(), p, q), SuperMatrix::identity(m.algebra(), p, q)};
  for (int i = 0; i < p + q; ++i) {
    for (int j = 0; j < p + q; ++j) {
      if (m.position_parity(i) == m.position_parity(j)) f.even(i, j) = m(i, j);
    }
  }
  for (int i = 0; i < p; ++i) {
    for (int j = p; j < p + q; ++j) {
      Coeff s = m.algebra().zero();
      for (int k = p; k < p + q; ++k) s += m(i, k) * d_inv(k - p, j - p);
      f.odd(i, j) = s;
    }
  }
  for (int i = p; i < p + q; ++i) {
    for (int j = 0; j < p; ++j) {
      Coeff s = m.algebra().zero();
      for (int k = 0; k < p; ++k) s += m(i, k) * a_inv(k, j);
      f.odd(i, j) = s;
    }
  }
  return f;
}

SuperMatrix gl_bracket(const SuperMatrix& m, const SuperMatrix& n) {
  auto pm = m.parity();
  auto pn = n.parity();
  if (!pm || !pn) throw StructureError("gl_bracket needs homogeneous arguments");
  if (*pm && *pn) return m * n + n * m;
  return m * n - n * m;
}

SuperMatrix gl_2op(const SuperMatrix& c) {
  if (!c.is_odd_homogeneous()) throw StructureError("the 2-operation needs an odd-homogeneous argument");
  return c * c;
}

}  // namespace shc
