#pragma once

// Linear super Harish-Chandra pairs (G_+, g): a matrix group G_+ inside
// GL(p|q) given by a membership predicate, and a Lie superalgebra g with
// representation matrices rho on k^{p|q}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shc/liesuper.hpp"
#include "shc/smat.hpp"

namespace shc {

class HarishChandraPair {
 public:
  HarishChandraPair() = default;
  /// `lie` must carry representation matrices of shape (p|q) matching the
  /// group. Throws StructureError otherwise, or when the odd (even) matrices
  /// are linearly dependent.
  HarishChandraPair(GroupDescriptor group, LieSuperalgebraData lie);

  const GroupDescriptor& group() const { return group_; }
  const LieSuperalgebraData& lie() const { return lie_; }
  Field field() const { return lie_.field(); }
  int p() const { return group_.p; }
  int q() const { return group_.q; }
  int odd_dim() const { return lie_.odd_dim(); }
  int even_dim() const { return lie_.even_dim(); }

  /// rho(v) as a supermatrix over `alg` (constant entries).
  SuperMatrix rho(const CoeffAlgebra& alg, const LieVec& v) const;
  SuperMatrix rho_basis(const CoeffAlgebra& alg, int a) const;
  /// (1 + eta Y_i) in GL(p|q)(A).
  SuperMatrix odd_factor(const Coeff& eta, int i) const;

  /// Coordinates of m in the A-span of the rho(Y_j) (resp. rho(X_k)); empty
  /// when the residual is nonzero.
  std::optional<std::vector<Coeff>> odd_coords(const SuperMatrix& m) const;
  std::optional<std::vector<Coeff>> even_coords(const SuperMatrix& m) const;

  /// c with rho(g)^-1 rho(Y_i) rho(g) = sum_j c_j rho(Y_j), i.e. the
  /// coordinates of Ad(g^-1)(Y_i). Throws MembershipViolation when g is not
  /// in G_+, SpanViolation when the conjugate leaves the span.
  std::vector<Coeff> ad_coords(const SuperMatrix& g, int i) const;
  /// Coordinates of Ad(g)(Y_i) = g Y_i g^-1.
  std::vector<Coeff> ad_coords_forward(const SuperMatrix& g, int i) const;

 private:
  GroupDescriptor group_;
  LieSuperalgebraData lie_;
  SpanSolver odd_solver_;
  SpanSolver even_solver_;
};

struct PairReport {
  AxiomReport checks;
  /// Statements about what was certified versus assumed.
  std::vector<std::string> notes;
  bool ok() const { return checks.ok(); }
  std::string to_string() const;
};

/// Runs the pair conditions over Lambda_4 coefficients with `samples` random
/// group elements: axioms of g and rho; Lie(G_+) contains (and, with a known
/// tangent dimension, equals) g_0; closure of the descriptor on samples;
/// Ad-stability of g_1; d(Ad) = bracket over dual numbers; compatibility of Ad
/// with the 2-operation.
PairReport validate_pair(const HarishChandraPair& pair, int samples = 64, std::uint64_t seed = 1);

/// A linear supergroup presented for probing: a membership predicate for
/// G(A) inside GL(p|q)(A), one for its even part, and candidate tangent
/// directions.
struct LinearSupergroup {
  std::string name;
  GroupDescriptor full;
  GroupDescriptor even_part;
  std::vector<KMatrix> even_candidates;
  std::vector<KMatrix> odd_candidates;
};

/// GL(p|q) with all elementary matrices as candidates.
LinearSupergroup gl_supergroup(Field f, int p, int q);

struct PhiResult {
  HarishChandraPair pair;
  PairReport report;
};

/// Reads off (G_0, Lie(G)): candidates that pass the dual-number probe in
/// `full` span g, the even part becomes G_+, and the result is validated.
PhiResult phi_of_group(const LinearSupergroup& g, int samples = 64, std::uint64_t seed = 1);

}  // namespace shc
