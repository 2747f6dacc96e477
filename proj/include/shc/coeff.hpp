#pragma once

// Exact scalars and coefficient superalgebras.
//
// A coefficient algebra is a supercommutative k-algebra generated by up to 16
// odd generators x1..xn (Grassmann, x_i x_j = -x_j x_i, x_i^2 = 0) and up to 8
// even nilpotent generators e1..em (e_j^2 = 0). The three supported variants
// are all of this shape:
//   Grassmann(n)        n odd, 0 even
//   SuperNumbers        k[eta] with one odd eta (so A_1^2 = 0)
//   DualExtension(B)    B with one extra even eps, eps^2 = 0
// Monomials are bitmasks: bits [0,16) odd generators, bits [16,24) even ones.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shc/errors.hpp"

namespace shc {

class Field {
 public:
  enum class Kind : std::uint8_t { Rational, Prime };

  Field() = default;
  static Field rationals() { return Field(); }
  /// Throws StructureError unless p is prime.
  static Field prime(std::uint32_t p);
  /// Accepts "Q" and "F<p>" (e.g. "F2", "F3", "F5").
  static Field parse(std::string_view name);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  Kind kind_ = Kind::Rational;
  std::uint32_t p_ = 0;
};

/// Element of Q or F_p. Binary operations require matching fields.
class Scalar {
 public:
  Scalar() = default;  // 0 in Q
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field f) { return Scalar(f, 0L); }
  static Scalar one(Field f) { return Scalar(f, 1L); }
  /// Parses "a", "a/b" or "a mod p"; the field decides the interpretation.
  static Scalar parse(Field field, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Throws NotInvertible on zero.
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "p/q" (or "p") over Q, "m mod p" over F_p.
  std::string to_string() const;

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

 private:
  void require_same(const Scalar& o) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_{mpq_class(0)};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

class Coeff;

class CoeffAlgebra {
 public:
  enum class Kind : std::uint8_t { Grassmann, SuperNumbers, DualExtension };
  using Mask = std::uint32_t;

  static constexpr int kMaxOdd = 16;
  static constexpr int kMaxEven = 8;
  static constexpr int kEvenShift = 16;
  static constexpr Mask kOddBits = 0xFFFFu;

  CoeffAlgebra() = default;  // the ground field Q viewed as Lambda_0
  static CoeffAlgebra grassmann(Field field, int rank);
  static CoeffAlgebra super_numbers(Field field);
  static CoeffAlgebra dual_extension(const CoeffAlgebra& inner);
  static CoeffAlgebra ground(Field field) { return grassmann(field, 0); }

  Kind kind() const { return kind_; }
  Field field() const { return field_; }
  int odd_generators() const { return odd_; }
  int even_generators() const { return even_; }
  /// N with (ker eps_A)^(N+1) = 0.
  int nilpotency_bound() const { return odd_ + even_; }
  /// Masks of all monomials of the algebra.
  std::vector<Mask> monomials() const;
  bool contains(Mask m) const;
  std::string name() const;

  Coeff zero() const;
  Coeff one() const;
  Coeff constant(const Scalar& s) const;
  Coeff constant(long v) const;
  /// x_i, 1-based.
  Coeff odd_generator(int i) const;
  /// e_j, 1-based.
  Coeff even_generator(int j) const;

  bool operator==(const CoeffAlgebra&) const = default;

 private:
  Kind kind_ = Kind::Grassmann;
  Kind inner_kind_ = Kind::Grassmann;
  Field field_;
  std::uint8_t odd_ = 0;
  std::uint8_t even_ = 0;
};

inline int mask_odd_degree(CoeffAlgebra::Mask m) {
  return __builtin_popcount(m & CoeffAlgebra::kOddBits);
}
inline int mask_degree(CoeffAlgebra::Mask m) { return __builtin_popcount(m); }

/// Sign (+1 or -1) of the permutation that merges the odd generators of a
/// and b into increasing order. Requires disjoint masks.
int merge_sign(CoeffAlgebra::Mask a, CoeffAlgebra::Mask b);

/// An element of a coefficient algebra in canonical sparse form: terms sorted
/// by mask, no zero coefficients.
class Coeff {
 public:
  using Mask = CoeffAlgebra::Mask;
  struct Term {
    Mask mask;
    Scalar coeff;
  };

  Coeff() = default;  // zero of the default algebra
  explicit Coeff(const CoeffAlgebra& alg) : alg_(alg) {}
  Coeff(const CoeffAlgebra& alg, const Scalar& constant);
  static Coeff monomial(const CoeffAlgebra& alg, Mask mask, const Scalar& c);

  const CoeffAlgebra& algebra() const { return alg_; }
  Field field() const { return alg_.field(); }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  Scalar coefficient(Mask m) const;

  /// Augmentation: the constant term.
  Scalar body() const { return coefficient(0); }
  Coeff soul() const;
  Coeff even_part() const;
  Coeff odd_part() const;
  /// Zero counts as both even and odd.
  bool is_even() const;
  bool is_odd() const;
  /// even_part() - odd_part(); the parity automorphism.
  Coeff flip() const;
  /// Image under A -> A/(A_1) -> A: drops every monomial containing an odd
  /// generator.
  Coeff reduce_bar() const;
  /// Smallest total degree of a monomial (the J-adic order); 0 if a constant
  /// term is present, a large value for zero.
  int order() const;

  /// Throws NotInvertible when the body is zero.
  Coeff inverse() const;

  /// Membership in A_1^(n), the unital subalgebra generated by products of n
  /// odd elements. Throws std::invalid_argument for n <= 0.
  bool in_a1n(int n) const;

  /// Re-homes the element into `target`, dropping monomials that use
  /// generators the target lacks. This is the canonical algebra map for
  /// inclusions and for quotients killing trailing generators.
  Coeff change_algebra(const CoeffAlgebra& target) const;

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator-() const;
  Coeff operator*(const Scalar& s) const;
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
  Coeff pow(unsigned e) const;

  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  /// Term list "c * x{i,j}e{k} + ..."; "0" for zero.
  std::string to_string() const;
  static Coeff parse(const CoeffAlgebra& alg, std::string_view text);

 private:
  void require_same(const Coeff& o) const;
  static Coeff from_unsorted(const CoeffAlgebra& alg, std::vector<Term> terms);

  CoeffAlgebra alg_;
  std::vector<Term> terms_;
};

inline Coeff operator*(const Scalar& s, const Coeff& c) { return c * s; }
std::ostream& operator<<(std::ostream& os, const Coeff& c);

}  // namespace shc
