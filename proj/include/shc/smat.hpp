#pragma once

// Supermatrices: elements of A (x) End(k^{p|q}).
//
// Entry (i,j) holds the coefficient of the elementary matrix E_ij, whose
// parity is |i|+|j| with |i| = 0 for i < p and 1 otherwise. Products follow
// the superalgebra rule (a (x) E)(b (x) F) = (-1)^{|E||b|} ab (x) EF, i.e.
//
//   (MN)_ik = sum_j (-1)^{(|i|+|j|) |n_jk|} m_ij n_jk.
//
// On matrices whose off-diagonal blocks vanish this is the naive product.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shc/coeff.hpp"
#include "shc/linalg.hpp"
#include "shc/random.hpp"

namespace shc {

class SuperMatrix {
 public:
  SuperMatrix() = default;
  /// Zero matrix of block shape (p|q).
  SuperMatrix(const CoeffAlgebra& alg, int p, int q);
  static SuperMatrix identity(const CoeffAlgebra& alg, int p, int q);
  /// E_ij, 0-based.
  static SuperMatrix elementary(const CoeffAlgebra& alg, int p, int q, int i, int j);
  static SuperMatrix from_scalars(const CoeffAlgebra& alg, int p, int q, const KMatrix& k);

  const CoeffAlgebra& algebra() const { return alg_; }
  int p() const { return p_; }
  int q() const { return q_; }
  int size() const { return p_ + q_; }
  int position_parity(int i) const { return i < p_ ? 0 : 1; }

  Coeff& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i * size() + j)]; }
  const Coeff& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i * size() + j)];
  }

  SuperMatrix operator+(const SuperMatrix& o) const;
  SuperMatrix operator-(const SuperMatrix& o) const;
  SuperMatrix operator-() const;
  /// Twisted product of A (x) End(V).
  SuperMatrix operator*(const SuperMatrix& o) const;
  /// (a (x) 1) * M: every entry multiplied on the left by a.
  SuperMatrix scaled(const Coeff& a) const;
  SuperMatrix scaled(const Scalar& s) const;

  /// Entry (i,j) has parity |i|+|j| (resp. |i|+|j|+1).
  bool is_even_homogeneous() const;
  bool is_odd_homogeneous() const;
  /// Off-diagonal blocks zero and diagonal-block entries in A_0.
  bool is_even_block_diagonal() const;
  SuperMatrix even_part() const;
  SuperMatrix odd_part() const;
  /// 0 or 1 for homogeneous matrices (zero counts as even).
  std::optional<int> parity() const;

  /// Entrywise augmentation.
  KMatrix body() const;
  SuperMatrix reduce_bar() const;
  SuperMatrix change_algebra(const CoeffAlgebra& target) const;
  bool is_identity() const;
  bool is_zero() const;

  /// Action on a column vector v = sum v_j (x) e_j, with |e_j| = |j|.
  std::vector<Coeff> apply(const std::vector<Coeff>& v) const;

  bool operator==(const SuperMatrix& o) const;
  bool operator!=(const SuperMatrix& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  void require_same(const SuperMatrix& o) const;

  CoeffAlgebra alg_;
  int p_ = 0, q_ = 0;
  std::vector<Coeff> entries_;
};

/// Invertible iff the body matrix is invertible over k.
bool is_invertible(const SuperMatrix& m);
/// Body lift plus Neumann series. Throws NotInvertible.
SuperMatrix inverse(const SuperMatrix& m);

struct GlFactors {
  SuperMatrix even;  // diag(a, d)
  SuperMatrix odd;   // I + odd-homogeneous
};
/// M = even * odd with odd = (I | a^-1 beta ; d^-1 gamma | I).
GlFactors gl_split(const SuperMatrix& m);
/// M = odd * even with odd = (I | beta d^-1 ; gamma a^-1 | I).
GlFactors gl_split_left(const SuperMatrix& m);

/// [M,N] = MN - (-1)^{|M||N|} NM for homogeneous M, N.
SuperMatrix gl_bracket(const SuperMatrix& m, const SuperMatrix& n);
/// C^<2> = CC for odd-homogeneous C.
SuperMatrix gl_2op(const SuperMatrix& c);

/// A (super)group of matrices presented by an exact membership predicate.
struct GroupDescriptor {
  std::string name;
  int p = 0, q = 0;
  std::function<bool(const SuperMatrix&)> contains;
  /// Random element of G(A_0) (or G(A) for supergroup descriptors).
  std::function<SuperMatrix(const CoeffAlgebra&, Rng&)> sample;
  /// Dimension of the tangent space at the identity, when known.
  std::optional<int> tangent_dim;
};

/// GL_p x GL_q: block-diagonal, A_0 entries, invertible.
GroupDescriptor gl_even_group(int p, int q);
/// GL(p|q) itself: even-homogeneous and invertible.
GroupDescriptor gl_super_group(int p, int q);
/// Invertible diagonal matrices with A_0 entries.
GroupDescriptor diagonal_torus(int p, int q);
/// Upper-triangular invertible blocks with A_0 entries.
GroupDescriptor borel_group(int p, int q);
/// Looks up one of the names above ("gl_even", "gl_super", "torus", "borel").
GroupDescriptor group_by_name(const std::string& name, int p, int q);

/// Tangent probe: does 1 + eps*a*Z lie in G(B[eps])? Here a = 1 for even Z
/// and a = x1 in B = Lambda_1 for odd Z. One flag per candidate.
std::vector<bool> lie_points(const GroupDescriptor& g, const std::vector<KMatrix>& candidates);

struct SemidirectFactors {
  SuperMatrix g_bar;  // G(sigma)(G(pi)(g))
  SuperMatrix g_ker;  // g_bar^-1 g, killed by G(pi)
};
/// Splits an A-point along A -> A/(A_1) -> A. Throws MembershipViolation when
/// a factor leaves G or G(pi)(g_ker) != 1.
SemidirectFactors semidirect_split(const GroupDescriptor& g, const SuperMatrix& point);

}  // namespace shc
