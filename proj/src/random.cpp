#include "shc/random.hpp"

namespace shc {

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

long Rng::between(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Scalar Rng::scalar(Field f) {
  if (!f.is_rational()) return Scalar(f, static_cast<long>(below(f.characteristic())));
  const long num = between(-3, 3);
  if (chance(1, 4)) return Scalar(f, mpq_class(num, between(2, 3)));
  return Scalar(f, num);
}

Scalar Rng::nonzero_scalar(Field f) {
  Scalar s = scalar(f);
  while (s.is_zero()) s = scalar(f);
  return s;
}

Coeff Rng::nilpotent(const CoeffAlgebra& alg, Parity parity, unsigned num, unsigned den) {
  Coeff out = alg.zero();
  for (CoeffAlgebra::Mask m : alg.monomials()) {
    if (m == 0) continue;
    const bool odd = mask_odd_degree(m) & 1;
    if (parity == Parity::Even && odd) continue;
    if (parity == Parity::Odd && !odd) continue;
    if (!chance(num, den)) continue;
    out += Coeff::monomial(alg, m, nonzero_scalar(alg.field()));
  }
  return out;
}

Coeff Rng::odd(const CoeffAlgebra& alg) {
  if (alg.odd_generators() == 0) return alg.zero();
  Coeff c = nilpotent(alg, Parity::Odd, 1, 3);
  while (c.is_zero()) c = nilpotent(alg, Parity::Odd, 1, 3);
  return c;
}

Coeff Rng::even_unit(const CoeffAlgebra& alg) {
  return alg.constant(nonzero_scalar(alg.field())) + nilpotent(alg, Parity::Even, 1, 3);
}

Coeff Rng::square_zero_even(const CoeffAlgebra& alg) { return odd(alg) * odd(alg); }

}  // namespace shc
