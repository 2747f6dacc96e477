#pragma once

// The supergroup G_P of a pair P = (G_+, g) on A-points: words in the
// generators g_+ and (1 + eta Y_i), their normal form
//
//   g = (1 + eta_1 Y_1) ... (1 + eta_d Y_d) . g_+
//
// (odd part on the left), multiplication and inversion on normal forms, the
// functor on morphisms, round-trip checks and induced representations.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shc/liesuper.hpp"
#include "shc/shcp.hpp"

namespace shc {

struct Token {
  enum class Kind { Even, Odd };
  Kind kind = Kind::Even;
  SuperMatrix g;  // Even
  int index = 0;  // Odd: 0-based basis index
  Coeff eta;      // Odd

  static Token even(SuperMatrix g);
  static Token odd(int index, Coeff eta);
  bool is_even() const { return kind == Kind::Even; }
  std::string to_string() const;
};

using GroupWord = std::vector<Token>;

struct NormalForm {
  std::vector<Coeff> etas;
  SuperMatrix g_plus;

  bool operator==(const NormalForm& o) const { return etas == o.etas && g_plus == o.g_plus; }
  bool operator!=(const NormalForm& o) const { return !(*this == o); }
  bool is_identity() const;
  std::string to_string() const;
};

/// One rewriting step, for --trace output.
struct RewriteStep {
  std::string rule;  // "drop", "merge-even", "cross", "swap", "square"
  int position = 0;
  std::string word;  // word after the step
};

struct RewriteResult {
  NormalForm nf;
  int passes = 0;  // 1 + highest generation of any token created
  long steps = 0;
  std::vector<RewriteStep> trace;
};

/// G_P(A) for a fixed pair and coefficient algebra.
class SuperGroup {
 public:
  static constexpr std::size_t kMaxWordLength = 10000;

  SuperGroup(HarishChandraPair pair, CoeffAlgebra alg);

  const HarishChandraPair& pair() const { return pair_; }
  const CoeffAlgebra& algebra() const { return alg_; }
  /// The induced module /\g_1 (x) k with trivial V0.
  const InducedModule& exterior() const { return exterior_; }

  /// Throws MembershipViolation for an Even token outside G_+(A_0),
  /// StructureError for a bad index, algebra or parity, or an overlong word.
  void validate(const GroupWord& w) const;

  /// rho(w) in GL(p|q)(A).
  SuperMatrix rho(const GroupWord& w) const;
  /// The word acting on /\g_1 (x) k as a supermatrix.
  SuperMatrix exterior_action(const GroupWord& w) const;

  /// Module extraction: eta_i is the coefficient of Ybar_i in w . 1, then
  /// g_+ = rho(prod (1 + eta_i Y_i))^-1 rho(w).
  NormalForm normal_form(const GroupWord& w) const;
  /// Independent rewriting with the commutation relations of G_P. Throws
  /// NonTermination when the pass bound N + 1 (N the nilpotency bound of A)
  /// or the step cap is exceeded.
  RewriteResult reorder_symbolic(const GroupWord& w, bool trace = false) const;
  /// For pairs whose odd matrices span every odd matrix (GL fixtures):
  /// factor rho-matrices directly by repeatedly stripping the odd part found
  /// by gl_split_left. Empty when the odd span is not all of gl(p|q)_1.
  std::optional<NormalForm> strip_matrix(const SuperMatrix& m) const;

  GroupWord expand(const NormalForm& nf) const;
  NormalForm identity() const;
  NormalForm mul(const NormalForm& a, const NormalForm& b) const;
  NormalForm inv(const NormalForm& a) const;
  NormalForm commutator(const NormalForm& a, const NormalForm& b) const;

  /// Random word with `length` tokens; Even tokens from the group sampler.
  GroupWord random_word(Rng& rng, int length) const;
  NormalForm random_element(Rng& rng) const;

 private:
  std::vector<std::vector<Coeff>> ad_forward(const SuperMatrix& g) const;
  void check_token(const Token& t) const;

  HarishChandraPair pair_;
  CoeffAlgebra alg_;
  InducedModule exterior_;
  bool odd_span_full_ = false;
};

/// Representation of G_P on /\g_1 (x) V0.
class InducedRepresentation {
 public:
  InducedRepresentation(const SuperGroup& g, EvenModule v0);
  const InducedModule& module() const { return module_; }
  SuperMatrix action(const GroupWord& w) const;
  SuperMatrix action(const NormalForm& nf) const;
  /// Module axioms of the carrier plus sampled compatibility of V0:
  /// the group action of 1 + eps X_k equals 1 + eps rho0(X_k).
  AxiomReport check(int samples, std::uint64_t seed) const;

 private:
  const SuperGroup* group_;
  InducedModule module_;
};

/// A morphism of linear pairs (Omega_+, omega).
struct PairMorphism {
  std::function<SuperMatrix(const SuperMatrix&)> omega_plus;
  /// omega(X_k) and omega(Y_i) as coordinate vectors in the target basis:
  /// even_map is d+'' x d+', odd_map is d-'' x d-'.
  KMatrix even_map;
  KMatrix odd_map;
};

/// Morphism induced by a position embedding k^{p'|q'} -> k^{p''|q''}
/// (source position i goes to target position pos[i], parities preserved):
/// Omega_+ pads with the identity and omega maps E_ij to E_pos(i)pos(j).
/// Throws SpanViolation when an image leaves the target g.
PairMorphism embedding_morphism(const HarishChandraPair& source, const HarishChandraPair& target,
                                const std::vector<int>& pos);
/// Omega_+ trivial and omega = 0.
PairMorphism zero_morphism(const HarishChandraPair& source, const HarishChandraPair& target);

/// Sampled morphism conditions: omega preserves brackets and squares,
/// omega|g_0 = d Omega_+, Omega_+ preserves membership and products, and
/// omega intertwines Ad.
AxiomReport check_morphism(const SuperGroup& source, const SuperGroup& target, const PairMorphism& m, int samples,
                           std::uint64_t seed);

/// Psi(m): prod (1 + eta_i omega(Y_i)) . Omega_+(g_+), renormalized.
NormalForm psi_on_morphism(const SuperGroup& source, const SuperGroup& target, const PairMorphism& m,
                           const NormalForm& nf);

/// Phi(Psi(P)): even points are exactly G_+(A_0), and the structure constants
/// of g come back from commutators and squares of one-parameter elements.
AxiomReport roundtrip_phi_psi(const HarishChandraPair& pair, int samples, std::uint64_t seed);
/// Psi(Phi(GL(p|q))) over Lambda_n: every sampled GL(p|q)(A) point is the
/// rho-image of exactly one normal form, compatible with gl_split_left.
AxiomReport roundtrip_psi_phi(Field f, int p, int q, int rank, int samples, std::uint64_t seed);

}  // namespace shc
