#pragma once

// Lie superalgebras with 2-operation, given by structure constants on a
// fixed homogeneous basis X_1..X_d+ (even) and Y_1..Y_d- (odd), and the
// induced module U(g) (x)_{U(g_0)} V0 = /\g_1 (x) V0 realized by PBW
// straightening.
//
// Basis elements are addressed by a single index: 0..d+-1 are the X_k,
// d+..d+ + d- - 1 are the Y_i. Elements of g over k are coordinate vectors in
// that basis.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shc/coeff.hpp"
#include "shc/linalg.hpp"
#include "shc/smat.hpp"

namespace shc {

using LieVec = std::vector<Scalar>;

/// Matrices rho(X_k), rho(Y_i) acting on k^{p|q}.
struct Representation {
  int p = 0, q = 0;
  std::vector<KMatrix> even;
  std::vector<KMatrix> odd;
};

class LieSuperalgebraData {
 public:
  LieSuperalgebraData() = default;
  /// All constants zero (the abelian superalgebra with zero 2-operation).
  LieSuperalgebraData(Field f, int d_even, int d_odd);

  Field field() const { return field_; }
  int even_dim() const { return d_even_; }
  int odd_dim() const { return d_odd_; }
  int dim() const { return d_even_ + d_odd_; }
  int x(int k) const { return k; }
  int y(int i) const { return d_even_ + i; }
  bool is_odd(int a) const { return a >= d_even_; }
  /// "X1", "Y2", ... (1-based, as in fixtures).
  std::string label(int a) const;

  const LieVec& bracket(int a, int b) const { return bracket_[static_cast<std::size_t>(a * dim() + b)]; }
  void set_bracket(int a, int b, LieVec value);
  /// Sets [a,b] and the value (-1)^{|a||b|+1} [a,b] for [b,a].
  void set_bracket_antisymmetric(int a, int b, const LieVec& value);
  /// Coordinates of Y_i^<2> in the even basis (length d+).
  const LieVec& two_op(int i) const { return two_op_[static_cast<std::size_t>(i)]; }
  void set_two_op(int i, LieVec value);

  const std::optional<Representation>& rho() const { return rho_; }
  void set_rho(Representation r);

  LieVec zero() const { return LieVec(static_cast<std::size_t>(dim()), Scalar::zero(field_)); }
  LieVec unit(int a) const;
  /// Bilinear extension of the stored constants.
  LieVec bracket(const LieVec& u, const LieVec& v) const;
  /// The 2-operation on an odd vector z = sum c_i Y_i, extended by
  /// quadraticity and polarization: sum c_i^2 Y_i^<2> + sum_{i<j} c_i c_j [Y_i,Y_j].
  LieVec two_op(const LieVec& z) const;
  /// rho applied to a coordinate vector. Requires rho().
  KMatrix rho_of(const LieVec& v) const;
  KMatrix rho_basis(int a) const;

 private:
  Field field_;
  int d_even_ = 0, d_odd_ = 0;
  std::vector<LieVec> bracket_;
  std::vector<LieVec> two_op_;
  std::optional<Representation> rho_;
};

struct AxiomFailure {
  std::string axiom;  // "a".."f", "parity", "rho"
  std::string where;  // basis tuple, e.g. "(Y1,Y2)"
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomFailure> failures;
  std::size_t checks = 0;
  bool ok() const { return failures.empty(); }
  std::string to_string() const;
};

/// Axioms (a)-(f) over k, bracket parity, and (when rho is present) the
/// homomorphism property of rho for bracket and 2-operation.
AxiomReport check_axioms(const LieSuperalgebraData& l);

/// Structure constants of the span of the given homogeneous matrices inside
/// gl(p|q). Throws ClosureViolation naming a bracket or square outside the
/// span, StructureError for dependent or inhomogeneous input.
LieSuperalgebraData from_matrices(Field f, int p, int q, const std::vector<KMatrix>& even_mats,
                                  const std::vector<KMatrix>& odd_mats);

/// A g_0-module V0 that integrates to G_+: matrices for the even basis and
/// the action of A_0-points of G_+ (an even block-diagonal matrix over A_0).
struct EvenModule {
  int p0 = 1, q0 = 0;
  std::vector<KMatrix> algebra_action;
  std::function<SuperMatrix(const SuperMatrix&)> group_action;
  int dim() const { return p0 + q0; }

  /// k^{1|0} with g_0 and G_+ acting trivially.
  static EvenModule trivial(Field f, int d_even);
  /// k^{p|q} with the matrices of rho (restricted to g_0) and G_+ acting by
  /// its matrices.
  static EvenModule defining(const LieSuperalgebraData& l);
};

/// The induced module /\g_1 (x) V0 with basis Ybar_S (x) e_t. The carrier is
/// ordered even basis vectors first so that operators are supermatrices of
/// shape (even | odd). All generator matrices are built eagerly in the
/// constructor; afterwards the object is read-only.
class InducedModule {
 public:
  using Subset = std::uint32_t;

  InducedModule() = default;
  InducedModule(const LieSuperalgebraData& l, EvenModule v0);

  const LieSuperalgebraData& lie() const { return lie_; }
  const EvenModule& v0() const { return v0_; }
  int dim() const { return static_cast<int>(subset_of_.size()); }
  int even_dim() const { return even_dim_; }
  int odd_dim() const { return dim() - even_dim_; }
  int index(Subset s, int t) const { return index_[static_cast<std::size_t>(s) * v0_.dim() + t]; }
  Subset subset_of(int pos) const { return subset_of_[static_cast<std::size_t>(pos)]; }
  int v0_of(int pos) const { return v0_of_[static_cast<std::size_t>(pos)]; }
  int parity(int pos) const { return pos < even_dim_ ? 0 : 1; }

  /// Matrix of a basis element of g over k, in carrier order.
  const KMatrix& generator(int a) const { return gen_[static_cast<std::size_t>(a)]; }
  /// Matrix of an arbitrary element of g.
  KMatrix matrix_of(const LieVec& v) const;

  /// b (x) e_t as an A-vector.
  std::vector<Coeff> basis_vector(const CoeffAlgebra& alg, Subset s, int t = 0) const;
  /// (1 + eta Y_i) applied to an A-vector: v + eta (rho(Y_i) acting with the
  /// sign (-1)^{|v_b|} on each coefficient).
  std::vector<Coeff> apply_odd(const Coeff& eta, int i, const std::vector<Coeff>& v) const;
  /// Supermatrix of (1 + eta Y_i) on A (x) carrier.
  SuperMatrix odd_matrix(const Coeff& eta, int i) const;
  /// Supermatrix of an even group element, given the coordinates c[s][j] of
  /// Ad(g) Y_s = sum_j c[s][j] Y_j (entries in A_0) and g acting on V0.
  SuperMatrix even_matrix(const std::vector<std::vector<Coeff>>& ad, const SuperMatrix& v0g) const;

  /// Graded commutator and 2-operation compatibility of the generator
  /// matrices on all basis pairs.
  AxiomReport check_module_axioms() const;

 private:
  std::vector<Scalar> act(int a, int pos);
  std::vector<Scalar> act_vec(int a, const std::vector<Scalar>& v);

  LieSuperalgebraData lie_;
  EvenModule v0_;
  int even_dim_ = 0;
  std::vector<int> index_;
  std::vector<Subset> subset_of_;
  std::vector<int> v0_of_;
  std::vector<KMatrix> gen_;
  std::vector<std::optional<std::vector<Scalar>>> memo_;
};

}  // namespace shc
