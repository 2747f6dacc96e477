#pragma once

// Reproducible sampling. All draws come from the 64-bit Mersenne Twister
// (std::mt19937_64), whose output sequence is fixed by the standard; bounded
// integers use rejection sampling on the raw output so results do not depend
// on the standard library's distribution implementations.

#include <cstdint>
#include <random>

#include "shc/coeff.hpp"

namespace shc {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  long between(long lo, long hi);
  bool chance(unsigned num, unsigned den) { return below(den) < num; }

  /// Small exact scalar; over Q an integer in [-3,3] or occasionally a
  /// fraction with denominator 2 or 3.
  Scalar scalar(Field f);
  Scalar nonzero_scalar(Field f);

  enum class Parity { Even, Odd, Any };
  /// Random element with monomials of the given parity drawn with
  /// probability num/den each. The constant monomial is never used.
  Coeff nilpotent(const CoeffAlgebra& alg, Parity parity, unsigned num = 1, unsigned den = 2);
  /// Random odd element, guaranteed nonzero when the algebra has odd
  /// generators.
  Coeff odd(const CoeffAlgebra& alg);
  /// Random even element with a nonzero body (hence invertible).
  Coeff even_unit(const CoeffAlgebra& alg);
  /// Random even element without body; squares to zero when built as a
  /// product of two odd elements (see square_zero_even).
  Coeff square_zero_even(const CoeffAlgebra& alg);

 private:
  std::mt19937_64 engine_;
};

}  // namespace shc
