#include <gtest/gtest.h>

#include "shc/smat.hpp"

using namespace shc;

namespace {

const Field Q = Field::rationals();

SuperMatrix E(const CoeffAlgebra& a, int p, int q, int i, int j) {
  return SuperMatrix::elementary(a, p, q, i - 1, j - 1);
}

// Oracle: expand both factors into (monomial (x) E_ij) pieces and multiply
// by (a (x) E)(b (x) F) = (-1)^{|E||b|} ab (x) EF.
SuperMatrix tensor_product(const SuperMatrix& m, const SuperMatrix& n) {
  const int sz = m.size();
  SuperMatrix r(m.algebra(), m.p(), m.q());
  for (int i = 0; i < sz; ++i) {
    for (int j = 0; j < sz; ++j) {
      const int e_parity = (m.position_parity(i) + m.position_parity(j)) % 2;
      for (const auto& ta : m(i, j).terms()) {
        for (int k = 0; k < sz; ++k) {
          for (const auto& tb : n(j, k).terms()) {
            const int b_parity = mask_odd_degree(tb.mask) % 2;
            const Coeff a = Coeff::monomial(m.algebra(), ta.mask, ta.coeff);
            const Coeff b = Coeff::monomial(m.algebra(), tb.mask, tb.coeff);
            Coeff ab = a * b;
            if (e_parity && b_parity) ab = -ab;
            r(i, k) += ab;
          }
        }
      }
    }
  }
  return r;
}

SuperMatrix random_matrix(const CoeffAlgebra& alg, int p, int q, Rng& rng) {
  SuperMatrix m(alg, p, q);
  for (int i = 0; i < p + q; ++i) {
    for (int j = 0; j < p + q; ++j) {
      m(i, j) = alg.constant(rng.scalar(alg.field())) + rng.nilpotent(alg, Rng::Parity::Any, 1, 3);
    }
  }
  return m;
}

}  // namespace

TEST(SuperMatrix, IdentityIsNeutral) {
  const auto a = CoeffAlgebra::grassmann(Q, 3);
  Rng rng(1);
  const SuperMatrix m = random_matrix(a, 2, 1, rng);
  const SuperMatrix i = SuperMatrix::identity(a, 2, 1);
  EXPECT_EQ(i * m, m);
  EXPECT_EQ(m * i, m);
}

TEST(SuperMatrix, TwistedProductExample) {
  const auto a = CoeffAlgebra::grassmann(Q, 2);
  const Coeff x1 = a.odd_generator(1), x2 = a.odd_generator(2);
  const SuperMatrix I = SuperMatrix::identity(a, 1, 1);
  const SuperMatrix y1 = E(a, 1, 1, 1, 2), y2 = E(a, 1, 1, 2, 1);
  const SuperMatrix lhs = (I + y1.scaled(x1)) * (I + y2.scaled(x2));
  const SuperMatrix expected = I + y1.scaled(x1) + y2.scaled(x2) + E(a, 1, 1, 1, 1).scaled(x2 * x1);
  EXPECT_EQ(lhs, expected);
  // swap instance: (1+x1Y')(1+x2Y'') = (1+x2x1[Y',Y''])(1+x2Y'')(1+x1Y').
  const SuperMatrix br = gl_bracket(y1, y2);
  const SuperMatrix rhs = (I + br.scaled(x2 * x1)) * (I + y2.scaled(x2)) * (I + y1.scaled(x1));
  EXPECT_EQ(lhs, rhs);
}

TEST(SuperMatrix, ProductMatchesTensorOracleAndIsAssociative) {
  Rng rng(2);
  for (const Field f : {Q, Field::prime(2), Field::prime(3)}) {
    const auto a = CoeffAlgebra::grassmann(f, 4);
    for (int t = 0; t < 30; ++t) {
      const SuperMatrix m = random_matrix(a, 2, 1, rng);
      const SuperMatrix n = random_matrix(a, 2, 1, rng);
      const SuperMatrix k = random_matrix(a, 2, 1, rng);
      ASSERT_EQ(m * n, tensor_product(m, n));
      ASSERT_EQ((m * n) * k, m * (n * k));
    }
  }
}

TEST(SuperMatrix, NaiveOnBlockDiagonalEvenPoints) {
  const auto a = CoeffAlgebra::grassmann(Q, 3);
  Rng rng(3);
  const auto g = gl_even_group(2, 2);
  const SuperMatrix m = g.sample(a, rng), n = g.sample(a, rng);
  const SuperMatrix prod = m * n;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      Coeff s = a.zero();
      for (int j = 0; j < 4; ++j) s += m(i, j) * n(j, k);
      ASSERT_EQ(prod(i, k), s);
    }
  }
}

TEST(SuperMatrix, Inversion) {
  const auto a = CoeffAlgebra::grassmann(Q, 1);
  const SuperMatrix I = SuperMatrix::identity(a, 1, 1);
  const SuperMatrix m = I + E(a, 1, 1, 1, 2).scaled(a.odd_generator(1));
  EXPECT_EQ(inverse(m), I - E(a, 1, 1, 1, 2).scaled(a.odd_generator(1)));

  const auto b = CoeffAlgebra::grassmann(Q, 3);
  Rng rng(4);
  const auto g = gl_super_group(2, 2);
  for (int t = 0; t < 20; ++t) {
    const SuperMatrix x = g.sample(b, rng);
    ASSERT_TRUE(is_invertible(x));
    ASSERT_TRUE(g.contains(x));
    ASSERT_EQ(x * inverse(x), SuperMatrix::identity(b, 2, 2));
    ASSERT_EQ(inverse(x) * x, SuperMatrix::identity(b, 2, 2));
  }
  EXPECT_THROW(inverse(SuperMatrix(b, 1, 1)), NotInvertible);
}

TEST(GlSplit, Examples) {
  const auto a = CoeffAlgebra::grassmann(Q, 2);
  const SuperMatrix I = SuperMatrix::identity(a, 1, 1);
  SuperMatrix m = I;
  m(0, 1) = a.odd_generator(1);
  m(1, 0) = a.odd_generator(2);
  const auto f = gl_split(m);
  EXPECT_EQ(f.even, I);
  EXPECT_EQ(f.odd, m);

  const SuperMatrix d = SuperMatrix::from_scalars(a, 1, 1, KMatrix::identity(Q, 2)).scaled(Scalar(Q, 3));
  const auto fd = gl_split(d);
  EXPECT_EQ(fd.even, d);
  EXPECT_EQ(fd.odd, I);
}

TEST(GlSplit, RandomReassembly) {
  const auto a = CoeffAlgebra::grassmann(Q, 3);
  Rng rng(5);
  const auto g = gl_super_group(2, 1);
  for (int t = 0; t < 30; ++t) {
    const SuperMatrix m = g.sample(a, rng);
    const auto f = gl_split(m);
    ASSERT_EQ(f.even * f.odd, m);
    ASSERT_TRUE(f.even.is_even_block_diagonal());
    // The odd factor differs from I only in the off-diagonal blocks, whose
    // entries are odd coefficients.
    const SuperMatrix n = f.odd - SuperMatrix::identity(a, 2, 1);
    ASSERT_TRUE(n.is_even_homogeneous());
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (n.position_parity(i) == n.position_parity(j)) ASSERT_TRUE(n(i, j).is_zero());
      }
    }
    const auto l = gl_split_left(m);
    ASSERT_EQ(l.odd * l.even, m);
    ASSERT_TRUE(l.even.is_even_block_diagonal());
  }
}

TEST(GlBracket, Examples) {
  const auto k = CoeffAlgebra::ground(Q);
  const SuperMatrix y1 = E(k, 1, 1, 1, 2), y2 = E(k, 1, 1, 2, 1);
  EXPECT_EQ(gl_bracket(y1, y2), SuperMatrix::identity(k, 1, 1));
  EXPECT_TRUE(gl_2op(y1).is_zero());
  EXPECT_EQ(gl_2op(y1 + y2), SuperMatrix::identity(k, 1, 1));
  const SuperMatrix x1 = E(k, 1, 1, 1, 1);
  EXPECT_EQ(gl_bracket(x1, y1), y1);
  EXPECT_THROW(gl_2op(x1), StructureError);
}

TEST(Groups, LiePoints) {
  const Field f = Q;
  std::vector<KMatrix> all;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      KMatrix z(f, 3, 3);
      z(i, j) = Scalar::one(f);
      all.push_back(z);
    }
  }
  for (bool ok : lie_points(gl_super_group(2, 1), all)) EXPECT_TRUE(ok);
  const auto even = lie_points(gl_even_group(2, 1), all);
  const auto torus = lie_points(diagonal_torus(2, 1), all);
  const auto borel = lie_points(borel_group(2, 1), all);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const bool same_block = (i < 2) == (j < 2);
      EXPECT_EQ(even[i * 3 + j], same_block);
      EXPECT_EQ(torus[i * 3 + j], i == j);
      EXPECT_EQ(borel[i * 3 + j], same_block && i <= j);
    }
  }
}

TEST(Groups, SemidirectSplit) {
  const auto a = CoeffAlgebra::grassmann(Q, 2);
  const auto g = gl_super_group(1, 1);
  const SuperMatrix pt =
      SuperMatrix::identity(a, 1, 1) + E(a, 1, 1, 1, 1).scaled(a.odd_generator(1) * a.odd_generator(2));
  const auto s = semidirect_split(g, pt);
  EXPECT_TRUE(s.g_bar.is_identity());
  EXPECT_EQ(s.g_ker, pt);

  const auto sn = CoeffAlgebra::super_numbers(Q);
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    const SuperMatrix x = g.sample(sn, rng);
    const auto f = semidirect_split(g, x);
    ASSERT_EQ(f.g_bar * f.g_ker, x);
    ASSERT_TRUE(f.g_ker.reduce_bar().is_identity());
    // Over k[eta] the even factor has constant entries.
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) ASSERT_TRUE(f.g_bar(i, j).soul().is_zero());
    }
  }
}
