#include <gtest/gtest.h>

#include <vector>

#include "shc/coeff.hpp"
#include "shc/random.hpp"

using namespace shc;

namespace {

const Field Q = Field::rationals();

Coeff X(const CoeffAlgebra& a, int i) { return a.odd_generator(i); }

// Independent oracle for the Grassmann product: multiply words of generator
// indices by bubble-sorting the concatenation and counting swaps.
Coeff word_product(const CoeffAlgebra& alg, std::vector<int> word) {
  int sign = 1;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = 0; j + 1 < word.size() - i; ++j) {
      if (word[j] == word[j + 1]) return alg.zero();
      if (word[j] > word[j + 1]) {
        std::swap(word[j], word[j + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t j = 0; j + 1 < word.size(); ++j) {
    if (word[j] == word[j + 1]) return alg.zero();
  }
  CoeffAlgebra::Mask m = 0;
  for (int g : word) m |= 1u << (g - 1);
  return Coeff::monomial(alg, m, Scalar(alg.field(), sign));
}

std::vector<int> mask_word(CoeffAlgebra::Mask m) {
  std::vector<int> w;
  for (int b = 0; b < 16; ++b) {
    if (m & (1u << b)) w.push_back(b + 1);
  }
  return w;
}

}  // namespace

TEST(Field, ParseAndValidate) {
  EXPECT_EQ(Field::parse("Q"), Field::rationals());
  EXPECT_EQ(Field::parse("F3").characteristic(), 3u);
  EXPECT_THROW(Field::prime(4), StructureError);
  EXPECT_THROW(Field::parse("R"), ParseError);
}

TEST(Scalar, ExactArithmetic) {
  const Scalar half = Scalar::parse(Q, "1/2");
  EXPECT_EQ(half + half, Scalar::one(Q));
  EXPECT_EQ(Scalar(Q, 2).inverse(), half);
  const Field f3 = Field::prime(3);
  EXPECT_EQ(Scalar(f3, 2) * Scalar(f3, 2), Scalar::one(f3));
  EXPECT_EQ(Scalar::parse(f3, "5 mod 3"), Scalar(f3, 2));
  EXPECT_EQ(Scalar(f3, -1).to_string(), "2 mod 3");
  EXPECT_THROW(Scalar::zero(f3).inverse(), NotInvertible);
  EXPECT_THROW(Scalar(Q, 1) + Scalar(f3, 1), StructureError);
}

TEST(Grassmann, BasicProducts) {
  const auto a = CoeffAlgebra::grassmann(Q, 2);
  EXPECT_EQ(X(a, 1) * X(a, 2), Coeff::parse(a, "1 * x{1,2}"));
  EXPECT_EQ(X(a, 2) * X(a, 1), Coeff::parse(a, "-1 * x{1,2}"));
  const Coeff z = X(a, 1) * X(a, 2);
  EXPECT_EQ((a.one() + z) * (a.one() - z), a.one());
  EXPECT_TRUE((X(a, 1) * X(a, 1)).is_zero());
}

TEST(Grassmann, RankMismatchIsStructural) {
  const auto a = CoeffAlgebra::grassmann(Q, 2);
  const auto b = CoeffAlgebra::grassmann(Q, 3);
  EXPECT_THROW(a.one() * b.one(), StructureError);
}

TEST(Grassmann, MonomialProductsMatchWordOracle) {
  for (int n = 1; n <= 4; ++n) {
    const auto alg = CoeffAlgebra::grassmann(Q, n);
    for (auto m1 : alg.monomials()) {
      for (auto m2 : alg.monomials()) {
        const Coeff x = Coeff::monomial(alg, m1, Scalar::one(Q));
        const Coeff y = Coeff::monomial(alg, m2, Scalar::one(Q));
        auto w = mask_word(m1);
        auto w2 = mask_word(m2);
        w.insert(w.end(), w2.begin(), w2.end());
        ASSERT_EQ(x * y, word_product(alg, w)) << x << " * " << y;
        const int sign = (mask_odd_degree(m1) * mask_odd_degree(m2)) % 2 ? -1 : 1;
        ASSERT_EQ(x * y, y * x * Scalar(Q, sign));
      }
    }
  }
}

TEST(Grassmann, AssociativityExhaustiveSmallRank) {
  const auto alg = CoeffAlgebra::grassmann(Q, 4);
  const auto ms = alg.monomials();
  for (auto a : ms) {
    for (auto b : ms) {
      for (auto c : ms) {
        const Coeff x = Coeff::monomial(alg, a, Scalar::one(Q));
        const Coeff y = Coeff::monomial(alg, b, Scalar::one(Q));
        const Coeff z = Coeff::monomial(alg, c, Scalar::one(Q));
        ASSERT_EQ((x * y) * z, x * (y * z));
      }
    }
  }
}

TEST(Grassmann, RandomSupercommutativityAndAssociativity) {
  Rng rng(7);
  for (const Field f : {Q, Field::prime(2), Field::prime(3), Field::prime(5)}) {
    const auto alg = CoeffAlgebra::grassmann(f, 8);
    for (int t = 0; t < 40; ++t) {
      const Coeff x = rng.nilpotent(alg, Rng::Parity::Any, 1, 16) + alg.constant(rng.scalar(f));
      const Coeff y = rng.nilpotent(alg, Rng::Parity::Any, 1, 16);
      const Coeff z = rng.nilpotent(alg, Rng::Parity::Any, 1, 16);
      ASSERT_EQ((x * y) * z, x * (y * z));
      const Coeff xy = x * y;
      ASSERT_EQ(xy.even_part() + xy.odd_part(), xy);
      // Even parts commute with everything; odd parts anticommute.
      ASSERT_EQ(x.even_part() * y, y * x.even_part());
      ASSERT_EQ(x.odd_part() * y.odd_part(), -(y.odd_part() * x.odd_part()));
      ASSERT_TRUE((x.odd_part() * y.odd_part()).is_even());
      ASSERT_TRUE((x.odd_part() * y.even_part()).is_odd());
    }
  }
}

TEST(Invert, Examples) {
  const auto a = CoeffAlgebra::grassmann(Q, 2);
  const Coeff z = X(a, 1) * X(a, 2);
  const Coeff inv = (a.one() + z).inverse();
  EXPECT_EQ(inv * (a.one() + z), a.one());
  EXPECT_EQ(inv, a.one() - z);
  EXPECT_EQ(a.constant(2).inverse(), a.constant(Scalar::parse(Q, "1/2")));
  EXPECT_THROW(X(a, 1).inverse(), NotInvertible);
}

TEST(Invert, RandomPerField) {
  Rng rng(11);
  for (const Field f : {Q, Field::prime(2), Field::prime(3), Field::prime(5)}) {
    const auto alg = CoeffAlgebra::grassmann(f, 5);
    for (int t = 0; t < 200; ++t) {
      const Coeff x = alg.constant(rng.nonzero_scalar(f)) + rng.nilpotent(alg, Rng::Parity::Any, 1, 3);
      const Coeff y = x.inverse();
      ASSERT_EQ(x * y, alg.one());
      ASSERT_EQ(y * x, alg.one());
    }
  }
}

TEST(ReduceBar, KillsOddGenerators) {
  const auto a = CoeffAlgebra::grassmann(Q, 2);
  const Coeff x = Coeff::parse(a, "3 + 1 * x{1} + 2 * x{1,2}");
  EXPECT_EQ(x.reduce_bar(), a.constant(3));
  const auto d = CoeffAlgebra::dual_extension(a);
  const Coeff y = Coeff::parse(d, "1 + 2 * e{1} + 1 * x{1}e{1}");
  EXPECT_EQ(y.reduce_bar(), Coeff::parse(d, "1 + 2 * e{1}"));
}

TEST(A1n, SuperNumbers) {
  const auto s = CoeffAlgebra::super_numbers(Q);
  const Coeff eta = s.odd_generator(1);
  EXPECT_TRUE(s.constant(5).in_a1n(1));
  EXPECT_TRUE(eta.in_a1n(1));
  EXPECT_TRUE((s.constant(2) + eta * Scalar(Q, 3)).in_a1n(1));
  EXPECT_TRUE((eta * eta).is_zero());
}

TEST(A1n, Grassmann) {
  const auto a = CoeffAlgebra::grassmann(Q, 3);
  EXPECT_FALSE(X(a, 1).in_a1n(2));
  EXPECT_TRUE((X(a, 1) * X(a, 2)).in_a1n(2));
  EXPECT_TRUE(a.one().in_a1n(2));
  // A_1^[2] is spanned by products of two odd elements, which are even, so
  // the degree-3 monomial is not reachable.
  EXPECT_FALSE((X(a, 1) * X(a, 2) * X(a, 3)).in_a1n(2));
  EXPECT_TRUE((X(a, 1) * X(a, 2) * X(a, 3)).in_a1n(1));
  EXPECT_TRUE((X(a, 1) * X(a, 2) * X(a, 3)).in_a1n(3));
  const auto b = CoeffAlgebra::grassmann(Q, 4);
  EXPECT_TRUE((X(b, 1) * X(b, 2) * X(b, 3) * X(b, 4)).in_a1n(2));
  EXPECT_THROW(a.one().in_a1n(0), std::invalid_argument);
}

TEST(Nilpotency, DeclaredBoundKillsAugmentationIdealPower) {
  const auto g = CoeffAlgebra::grassmann(Q, 4);
  const auto s = CoeffAlgebra::super_numbers(Q);
  const auto d = CoeffAlgebra::dual_extension(CoeffAlgebra::grassmann(Q, 2));
  for (const auto& alg : {g, s, d}) {
    Coeff sum = alg.zero();
    for (int i = 1; i <= alg.odd_generators(); ++i) sum += alg.odd_generator(i);
    for (int j = 1; j <= alg.even_generators(); ++j) sum += alg.even_generator(j);
    const int n = alg.nilpotency_bound();
    // Products of N generators can survive; any N+1 of them die.
    EXPECT_TRUE(sum.pow(static_cast<unsigned>(n + 1)).is_zero()) << alg.name();
    Coeff prod = alg.one();
    for (int i = 1; i <= alg.odd_generators(); ++i) prod *= alg.odd_generator(i);
    for (int j = 1; j <= alg.even_generators(); ++j) prod *= alg.even_generator(j);
    EXPECT_FALSE(prod.is_zero());
    EXPECT_EQ(prod.order(), n);
  }
  EXPECT_TRUE((d.even_generator(1) * d.even_generator(1)).is_zero());
  EXPECT_TRUE(d.even_generator(1).is_even());
}

TEST(Serialization, RoundTrip) {
  const auto f3 = CoeffAlgebra::grassmann(Field::prime(3), 3);
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const Coeff x = rng.nilpotent(f3, Rng::Parity::Any, 1, 2) + f3.constant(rng.scalar(f3.field()));
    EXPECT_EQ(Coeff::parse(f3, x.to_string()), x);
  }
  const auto q = CoeffAlgebra::grassmann(Q, 2);
  EXPECT_EQ(Coeff::parse(q, "1/2 * x{2,1}"), Coeff::parse(q, "-1/2 * x{1,2}"));
  EXPECT_EQ(q.zero().to_string(), "0");
  EXPECT_THROW(Coeff::parse(q, "1 * x{3}"), ParseError);
}
