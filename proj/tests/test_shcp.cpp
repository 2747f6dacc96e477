#include <gtest/gtest.h>

#include "shc/fixtures.hpp"
#include "shc/shcp.hpp"

using namespace shc;
using shc::fixtures::elem;

namespace {

const Field Q = Field::rationals();

bool has_family(const PairReport& r, const std::string& family) {
  for (const auto& f : r.checks.failures) {
    if (f.axiom == family) return true;
  }
  return false;
}

}  // namespace

TEST(ValidatePair, Gl11Passes) {
  for (const Field f : {Q, Field::prime(2), Field::prime(3)}) {
    const auto rep = validate_pair(fixtures::gl_pair(f, 1, 1), 16);
    EXPECT_TRUE(rep.ok()) << f.name() << " " << rep.to_string();
  }
}

TEST(ValidatePair, OddLinePasses) {
  const auto rep = validate_pair(fixtures::line_pair(Q), 16);
  EXPECT_TRUE(rep.ok()) << rep.to_string();
}

TEST(ValidatePair, TorusWithTwistedLineIsNotAdStable) {
  const auto rep = validate_pair(fixtures::ad_unstable_pair(Q), 8);
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(has_family(rep, "ad-stability")) << rep.to_string();
}

TEST(ValidatePair, OtherFixtures) {
  for (const Field f : {Q, Field::prime(3)}) {
    for (const auto& name : {"gl21", "gl11-twisted", "gl11-rotated", "gl11-reversed", "borel21", "even11"}) {
      const auto rep = validate_pair(fixtures::pair_by_name(name, f), 8);
      EXPECT_TRUE(rep.ok()) << name << " " << f.name() << " " << rep.to_string();
    }
  }
  const auto rep = validate_pair(fixtures::gl11_twisted_pair(Field::prime(2)), 8);
  EXPECT_TRUE(rep.ok()) << rep.to_string();
}

TEST(AdCoords, IdentityGivesUnitVectors) {
  const auto pair = fixtures::gl_pair(Q, 2, 1);
  const auto alg = CoeffAlgebra::grassmann(Q, 3);
  const auto id = SuperMatrix::identity(alg, 2, 1);
  for (int i = 0; i < pair.odd_dim(); ++i) {
    const auto c = pair.ad_coords(id, i);
    for (int j = 0; j < pair.odd_dim(); ++j) EXPECT_EQ(c[j], i == j ? alg.one() : alg.zero());
  }
}

TEST(AdCoords, DiagonalConjugation) {
  // diag(a,d)^-1 E12 diag(a,d) = a^-1 d E12 and E21 goes to d^-1 a E21.
  const auto pair = fixtures::gl_pair(Q, 1, 1);
  const auto alg = CoeffAlgebra::grassmann(Q, 4);
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const Coeff a = rng.even_unit(alg), d = rng.even_unit(alg);
    SuperMatrix g(alg, 1, 1);
    g(0, 0) = a;
    g(1, 1) = d;
    const auto c0 = pair.ad_coords(g, 0);
    const auto c1 = pair.ad_coords(g, 1);
    EXPECT_EQ(c0[0], a.inverse() * d);
    EXPECT_TRUE(c0[1].is_zero());
    EXPECT_EQ(c1[1], d.inverse() * a);
    EXPECT_TRUE(c1[0].is_zero());
  }
}

TEST(AdCoords, SpanViolationAndMembership) {
  const auto pair = fixtures::ad_unstable_pair(Q);
  const auto alg = CoeffAlgebra::grassmann(Q, 2);
  SuperMatrix g = SuperMatrix::identity(alg, 2, 1);
  g(0, 0) = alg.constant(2);
  EXPECT_THROW(pair.ad_coords(g, 0), SpanViolation);
  SuperMatrix bad = SuperMatrix::identity(alg, 2, 1);
  bad(0, 1) = alg.one();
  EXPECT_THROW(pair.ad_coords(bad, 0), MembershipViolation);
}

TEST(AdCoords, IsAnAction) {
  // Ad((gh)^-1) = Ad(h^-1) Ad(g^-1): c(gh)_i = sum_j c(g)_ij c(h)_j.
  const auto pair = fixtures::gl_pair(Q, 2, 1);
  const auto alg = CoeffAlgebra::grassmann(Q, 4);
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const SuperMatrix g = pair.group().sample(alg, rng);
    const SuperMatrix h = pair.group().sample(alg, rng);
    for (int i = 0; i < pair.odd_dim(); ++i) {
      const auto cg = pair.ad_coords(g, i);
      std::vector<Coeff> expect(static_cast<std::size_t>(pair.odd_dim()), alg.zero());
      for (int j = 0; j < pair.odd_dim(); ++j) {
        const auto ch = pair.ad_coords(h, j);
        for (int m = 0; m < pair.odd_dim(); ++m) expect[m] += cg[j] * ch[m];
      }
      ASSERT_EQ(pair.ad_coords(g * h, i), expect);
    }
  }
}

TEST(AdCoords, ConjugationOfOddFactor) {
  // g^-1 (1 + eta Y_i) g = prod_j (1 + eta c_j Y_j) with c = ad_coords(g, i).
  const auto pair = fixtures::gl_pair(Field::prime(3), 2, 1);
  const auto alg = CoeffAlgebra::grassmann(Field::prime(3), 4);
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const SuperMatrix g = pair.group().sample(alg, rng);
    const Coeff eta = rng.odd(alg);
    for (int i = 0; i < pair.odd_dim(); ++i) {
      const auto c = pair.ad_coords(g, i);
      SuperMatrix rhs = SuperMatrix::identity(alg, 2, 1);
      for (int j = 0; j < pair.odd_dim(); ++j) rhs = rhs * pair.odd_factor(eta * c[j], j);
      ASSERT_EQ(inverse(g) * pair.odd_factor(eta, i) * g, rhs);
    }
  }
}

TEST(PhiOfGroup, GeneralLinear) {
  const auto r11 = phi_of_group(gl_supergroup(Q, 1, 1), 16);
  EXPECT_TRUE(r11.report.ok()) << r11.report.to_string();
  EXPECT_EQ(r11.pair.even_dim(), 2);
  EXPECT_EQ(r11.pair.odd_dim(), 2);
  const auto l = r11.pair.lie();
  // [E12, E21] = E11 + E22.
  EXPECT_EQ(l.bracket(l.y(0), l.y(1)), (LieVec{Scalar(Q, 1), Scalar(Q, 1), Scalar(Q, 0), Scalar(Q, 0)}));

  const auto r21 = phi_of_group(gl_supergroup(Field::prime(3), 2, 1), 8);
  EXPECT_TRUE(r21.report.ok()) << r21.report.to_string();
  const auto ref = fixtures::gl_lie(Field::prime(3), 2, 1);
  for (int a = 0; a < ref.dim(); ++a) {
    for (int b = 0; b < ref.dim(); ++b) EXPECT_EQ(r21.pair.lie().bracket(a, b), ref.bracket(a, b));
  }
}

TEST(PhiOfGroup, NoOddCandidates) {
  auto g = gl_supergroup(Q, 1, 1);
  g.odd_candidates.clear();
  const auto r = phi_of_group(g, 8);
  EXPECT_EQ(r.pair.odd_dim(), 0);
  EXPECT_TRUE(r.report.ok()) << r.report.to_string();
}
