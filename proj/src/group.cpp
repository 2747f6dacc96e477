#include <stdexcept>

#include "shc/smat.hpp"

namespace shc {

namespace {

bool shape_matches(const SuperMatrix& m, int p, int q) { return m.p() == p && m.q() == q; }

enum class BodyShape { Full, Diagonal, Upper };

KMatrix random_invertible_block(Field f, int n, BodyShape shape, Rng& rng) {
  while (true) {
    KMatrix k(f, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          k(i, j) = rng.nonzero_scalar(f);
        } else if (shape == BodyShape::Full || (shape == BodyShape::Upper && i < j)) {
          k(i, j) = rng.scalar(f);
        }
      }
    }
    if (k.rank() == static_cast<std::size_t>(n)) return k;
  }
}

// Random even block-diagonal A_0 point with the given body pattern; the
// nilpotent perturbation respects the same pattern.
SuperMatrix sample_even(const CoeffAlgebra& alg, int p, int q, BodyShape shape, Rng& rng) {
  SuperMatrix m(alg, p, q);
  const KMatrix a = random_invertible_block(alg.field(), p, shape, rng);
  const KMatrix d = random_invertible_block(alg.field(), q, shape, rng);
  auto allowed = [shape](int i, int j) {
    return shape == BodyShape::Full || i == j || (shape == BodyShape::Upper && i < j);
  };
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (!allowed(i, j)) continue;
      m(i, j) = alg.constant(a(i, j)) + rng.nilpotent(alg, Rng::Parity::Even, 1, 4);
    }
  }
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      if (!allowed(i, j)) continue;
      m(p + i, p + j) = alg.constant(d(i, j)) + rng.nilpotent(alg, Rng::Parity::Even, 1, 4);
    }
  }
  return m;
}

bool pattern_ok(const SuperMatrix& m, BodyShape shape) {
  if (!m.is_even_block_diagonal()) return false;
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (m.position_parity(i) != m.position_parity(j) || i == j) continue;
      if (shape == BodyShape::Diagonal && !m(i, j).is_zero()) return false;
      if (shape == BodyShape::Upper && i > j && !m(i, j).is_zero()) return false;
    }
  }
  return true;
}

GroupDescriptor even_group(std::string name, int p, int q, BodyShape shape, int tangent) {
  GroupDescriptor g;
  g.name = std::move(name);
  g.p = p;
  g.q = q;
  g.contains = [p, q, shape](const SuperMatrix& m) {
    return shape_matches(m, p, q) && pattern_ok(m, shape) && is_invertible(m);
  };
  g.sample = [p, q, shape](const CoeffAlgebra& alg, Rng& rng) { return sample_even(alg, p, q, shape, rng); };
  g.tangent_dim = tangent;
  return g;
}

}  // namespace

GroupDescriptor gl_even_group(int p, int q) {
  return even_group("gl_even", p, q, BodyShape::Full, p * p + q * q);
}

GroupDescriptor diagonal_torus(int p, int q) { return even_group("torus", p, q, BodyShape::Diagonal, p + q); }

GroupDescriptor borel_group(int p, int q) {
  return even_group("borel", p, q, BodyShape::Upper, p * (p + 1) / 2 + q * (q + 1) / 2);
}

GroupDescriptor gl_super_group(int p, int q) {
  GroupDescriptor g;
  g.name = "gl_super";
  g.p = p;
  g.q = q;
  g.contains = [p, q](const SuperMatrix& m) {
    return shape_matches(m, p, q) && m.is_even_homogeneous() && is_invertible(m);
  };
  g.sample = [p, q](const CoeffAlgebra& alg, Rng& rng) {
    SuperMatrix m = sample_even(alg, p, q, BodyShape::Full, rng);
    for (int i = 0; i < p + q; ++i) {
      for (int j = 0; j < p + q; ++j) {
        if (m.position_parity(i) != m.position_parity(j)) {
          m(i, j) = rng.nilpotent(alg, Rng::Parity::Odd, 1, 3);
        }
      }
    }
    return m;
  };
  g.tangent_dim = (p + q) * (p + q);
  return g;
}

GroupDescriptor group_by_name(const std::string& name, int p, int q) {
  if (name == "gl_even") return gl_even_group(p, q);
  if (name == "gl_super") return gl_super_group(p, q);
  if (name == "torus") return diagonal_torus(p, q);
  if (name == "borel") return borel_group(p, q);
  throw ParseError("unknown group descriptor '" + name + "'");
}

std::vector<bool> lie_points(const GroupDescriptor& g, const std::vector<KMatrix>& candidates) {
  std::vector<bool> out;
  out.reserve(candidates.size());
  for (const auto& z : candidates) {
    const Field f = z.field();
    const CoeffAlgebra ground = CoeffAlgebra::ground(f);
    const SuperMatrix zm = SuperMatrix::from_scalars(ground, g.p, g.q, z);
    const auto parity = zm.parity();
    if (!parity) {
      out.push_back(false);
      continue;
    }
    const CoeffAlgebra base = *parity ? CoeffAlgebra::grassmann(f, 1) : ground;
    const CoeffAlgebra dual = CoeffAlgebra::dual_extension(base);
    Coeff direction = dual.even_generator(1);
    if (*parity) direction = direction * dual.odd_generator(1);
    const SuperMatrix probe =
        SuperMatrix::identity(dual, g.p, g.q) + zm.change_algebra(dual).scaled(direction);
    out.push_back(g.contains(probe));
  }
  return out;
}

SemidirectFactors semidirect_split(const GroupDescriptor& g, const SuperMatrix& point) {
  if (!g.contains(point)) throw MembershipViolation("point is not in " + g.name);
  SemidirectFactors f{point.reduce_bar(), SuperMatrix()};
  f.g_ker = inverse(f.g_bar) * point;
  if (!g.contains(f.g_bar)) throw MembershipViolation("G(sigma)G(pi)(g) left " + g.name);
  if (!g.contains(f.g_ker)) throw MembershipViolation("g_bar^-1 g left " + g.name);
  if (!f.g_ker.reduce_bar().is_identity()) throw MembershipViolation("G(pi)(g_ker) != 1");
  return f;
}

}  // namespace shc
