#include <gtest/gtest.h>

#include "shc/fixtures.hpp"
#include "shc/gp.hpp"

using namespace shc;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

void expect_triangle(const SuperGroup& g, const GroupWord& w) {
  const NormalForm nf = g.normal_form(w);
  ASSERT_EQ(g.rho(g.expand(nf)), g.rho(w));
  ASSERT_EQ(g.exterior_action(g.expand(nf)), g.exterior_action(w));
  const RewriteResult r = g.reorder_symbolic(w);
  ASSERT_EQ(r.nf, nf) << "rewrite: " << r.nf.to_string() << "\nmodule: " << nf.to_string();
  ASSERT_LE(r.passes, g.algebra().nilpotency_bound() + 1);
  if (const auto s = g.strip_matrix(g.rho(w))) ASSERT_EQ(*s, nf);
}

}  // namespace

TEST(NormalForm, SingleEvenToken) {
  const SuperGroup g(fixtures::gl_pair(Q, 2, 1), CoeffAlgebra::grassmann(Q, 3));
  Rng rng(1);
  const SuperMatrix h = g.pair().group().sample(g.algebra(), rng);
  EXPECT_EQ(g.normal_form({Token::even(h)}), (NormalForm{g.identity().etas, h}));
  EXPECT_TRUE(g.normal_form({}).is_identity());
}

TEST(NormalForm, InvertedPair) {
  // (1 + x1 Y2)(1 + x2 Y1) = (1 + x2 Y1)(1 + x1 Y2)(1 + x2x1 [Y2,Y1]) with
  // [Y2,Y1] = E11 + E22, so g+ = (1 - x1x2) I.
  const auto alg = CoeffAlgebra::grassmann(Q, 2);
  const SuperGroup g(fixtures::gl_pair(Q, 1, 1), alg);
  const Coeff x1 = alg.odd_generator(1), x2 = alg.odd_generator(2);
  const GroupWord w{Token::odd(1, x1), Token::odd(0, x2)};
  const NormalForm nf = g.normal_form(w);
  EXPECT_EQ(nf.etas, (std::vector<Coeff>{x2, x1}));
  EXPECT_EQ(nf.g_plus, SuperMatrix::identity(alg, 1, 1).scaled(alg.one() - x1 * x2));
  EXPECT_EQ(g.rho(g.expand(nf)), g.rho(w));
  expect_triangle(g, w);
}

TEST(NormalForm, RepeatedIndex) {
  const auto alg = CoeffAlgebra::grassmann(F2, 2);
  const Coeff x1 = alg.odd_generator(1), x2 = alg.odd_generator(2);
  // Y1 = E12 squares to zero.
  const SuperGroup g(fixtures::gl_pair(F2, 1, 1), alg);
  NormalForm nf = g.normal_form({Token::odd(0, x1), Token::odd(0, x2)});
  EXPECT_EQ(nf.etas, (std::vector<Coeff>{x1 + x2, alg.zero()}));
  EXPECT_TRUE(nf.g_plus.is_identity());
  // Y1 = E12 + E21 squares to I over F2.
  const SuperGroup t(fixtures::gl11_twisted_pair(F2), alg);
  nf = t.normal_form({Token::odd(0, x1), Token::odd(0, x2)});
  EXPECT_EQ(nf.etas, (std::vector<Coeff>{x1 + x2, alg.zero()}));
  EXPECT_EQ(nf.g_plus, SuperMatrix::identity(alg, 1, 1).scaled(alg.one() + x2 * x1));
  expect_triangle(t, {Token::odd(1, x1), Token::odd(0, x2), Token::odd(1, x2), Token::odd(0, x1)});
}

TEST(NormalForm, RejectsBadTokens) {
  const auto alg = CoeffAlgebra::grassmann(Q, 2);
  const SuperGroup g(fixtures::gl_pair(Q, 1, 1), alg);
  EXPECT_THROW(g.normal_form({Token::odd(0, alg.one())}), StructureError);
  EXPECT_THROW(g.normal_form({Token::odd(2, alg.odd_generator(1))}), StructureError);
  SuperMatrix bad = SuperMatrix::identity(alg, 1, 1);
  bad(0, 1) = alg.odd_generator(1);
  EXPECT_THROW(g.normal_form({Token::even(bad)}), MembershipViolation);
}

TEST(OracleTriangle, RandomWords) {
  struct Case {
    std::string name;
    Field f;
  };
  for (const auto& c : std::vector<Case>{{"gl11", Q}, {"gl21", Q}, {"gl11-twisted", F2}, {"gl21", F3},
                                         {"borel21", Q}, {"line", F3}, {"gl11-rotated", F3}}) {
    const SuperGroup g(fixtures::pair_by_name(c.name, c.f), CoeffAlgebra::grassmann(c.f, 4));
    Rng rng(11);
    for (int t = 0; t < 25; ++t) {
      const GroupWord w = g.random_word(rng, 1 + static_cast<int>(rng.below(12)));
      SCOPED_TRACE(c.name + " " + c.f.name() + " word " + std::to_string(t));
      expect_triangle(g, w);
    }
  }
}

TEST(OracleTriangle, TraceRecordsSteps) {
  const auto alg = CoeffAlgebra::grassmann(Q, 2);
  const SuperGroup g(fixtures::gl_pair(Q, 1, 1), alg);
  const auto r = g.reorder_symbolic({Token::odd(1, alg.odd_generator(1)), Token::odd(0, alg.odd_generator(2))}, true);
  ASSERT_FALSE(r.trace.empty());
  EXPECT_EQ(r.trace.front().rule, "swap");
  EXPECT_EQ(r.passes, 2);
}

TEST(GroupAxioms, InverseIdentityAssociativity) {
  for (const Field f : {Q, F2, F3}) {
    const SuperGroup g(fixtures::gl_pair(f, 2, 1), CoeffAlgebra::grassmann(f, 4));
    Rng rng(12);
    for (int t = 0; t < 10; ++t) {
      const NormalForm a = g.random_element(rng), b = g.random_element(rng), c = g.random_element(rng);
      ASSERT_EQ(g.mul(a, g.identity()), a);
      ASSERT_EQ(g.mul(g.identity(), a), a);
      ASSERT_TRUE(g.mul(a, g.inv(a)).is_identity());
      ASSERT_TRUE(g.mul(g.inv(a), a).is_identity());
      ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
    }
  }
}

TEST(Uniqueness, PerturbedFormsActDistinctly) {
  const auto alg = CoeffAlgebra::grassmann(Q, 3);
  const SuperGroup g(fixtures::gl_pair(Q, 1, 1), alg);
  const InducedRepresentation rep(g, EvenModule::defining(g.pair().lie()));
  Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    const NormalForm nf = g.random_element(rng);
    NormalForm eta_moved = nf;
    eta_moved.etas[rng.below(2)] += rng.odd(alg);
    NormalForm g_moved = nf;
    g_moved.g_plus = g_moved.g_plus * g.pair().group().sample(alg, rng);
    const SuperMatrix base = rep.action(nf);
    if (eta_moved != nf) EXPECT_NE(rep.action(eta_moved), base);
    if (g_moved != nf) EXPECT_NE(rep.action(g_moved), base);
  }
}

TEST(Induced, CarrierAndChecks) {
  const auto alg = CoeffAlgebra::grassmann(F3, 3);
  const SuperGroup g(fixtures::gl_pair(F3, 1, 1), alg);
  const InducedRepresentation triv(g, EvenModule::trivial(F3, 2));
  EXPECT_EQ(triv.module().dim(), 4);
  const GroupWord w{Token::odd(0, alg.odd_generator(1)), Token::odd(1, alg.odd_generator(2))};
  EXPECT_EQ(triv.action(w), g.exterior_action(w));
  const InducedRepresentation def(g, EvenModule::defining(g.pair().lie()));
  EXPECT_EQ(def.module().dim(), 8);
  const auto r = def.check(10, 1);
  EXPECT_TRUE(r.ok()) << r.to_string();
}

TEST(Morphisms, IdentityCornerAndZero) {
  const auto alg = CoeffAlgebra::grassmann(Q, 2);
  const SuperGroup s(fixtures::gl_pair(Q, 1, 1), alg);
  const SuperGroup t(fixtures::gl_pair(Q, 2, 1), alg);
  Rng rng(14);

  const PairMorphism id = embedding_morphism(s.pair(), s.pair(), {0, 1});
  EXPECT_TRUE(check_morphism(s, s, id, 8, 1).ok());
  for (int k = 0; k < 10; ++k) {
    const NormalForm nf = s.random_element(rng);
    EXPECT_EQ(psi_on_morphism(s, s, id, nf), nf);
  }

  const PairMorphism corner = embedding_morphism(s.pair(), t.pair(), {0, 2});
  const auto rep = check_morphism(s, t, corner, 8, 1);
  EXPECT_TRUE(rep.ok()) << rep.to_string();
  SuperMatrix d = SuperMatrix::identity(alg, 1, 1);
  d(0, 0) = alg.constant(2);
  d(1, 1) = alg.constant(-3);
  const NormalForm nf{{alg.odd_generator(1), alg.zero()}, d};
  const NormalForm image = psi_on_morphism(s, t, corner, nf);
  EXPECT_EQ(t.rho(t.expand(image)), corner.omega_plus(s.rho(s.expand(nf))));
  for (int k = 0; k < 10; ++k) {
    const NormalForm a = s.random_element(rng), b = s.random_element(rng);
    EXPECT_EQ(psi_on_morphism(s, t, corner, s.mul(a, b)),
              t.mul(psi_on_morphism(s, t, corner, a), psi_on_morphism(s, t, corner, b)));
  }

  const PairMorphism zero = zero_morphism(s.pair(), t.pair());
  EXPECT_TRUE(psi_on_morphism(s, t, zero, s.normal_form({Token::odd(1, alg.odd_generator(2))})).is_identity());
}

TEST(RoundTrip, PhiOfPsi) {
  for (const auto& [name, f] : std::vector<std::pair<std::string, Field>>{
           {"gl11", Q}, {"gl21", F3}, {"gl11-twisted", F2}, {"borel21", Q}, {"even11", Q}, {"line", F2}}) {
    const auto r = roundtrip_phi_psi(fixtures::pair_by_name(name, f), 8, 1);
    EXPECT_TRUE(r.ok()) << name << " " << r.to_string();
  }
}

TEST(RoundTrip, PsiOfPhi) {
  const auto r = roundtrip_psi_phi(Q, 1, 1, 3, 40, 1);
  EXPECT_TRUE(r.ok()) << r.to_string();
  const auto r2 = roundtrip_psi_phi(F2, 2, 1, 3, 10, 2);
  EXPECT_TRUE(r2.ok()) << r2.to_string();
}

TEST(BasisChange, TablesAgree) {
  for (const Field f : {Q, F3}) {
    const auto alg = CoeffAlgebra::grassmann(f, 4);
    const SuperGroup std_g(fixtures::gl_pair(f, 1, 1), alg);
    for (const auto& name : {"gl11-rotated", "gl11-reversed"}) {
      const SuperGroup other(fixtures::pair_by_name(name, f), alg);
      const PairMorphism m = embedding_morphism(std_g.pair(), other.pair(), {0, 1});
      Rng rng(15);
      for (int k = 0; k < 10; ++k) {
        const NormalForm a = std_g.random_element(rng), b = std_g.random_element(rng);
        ASSERT_EQ(psi_on_morphism(std_g, other, m, std_g.mul(a, b)),
                  other.mul(psi_on_morphism(std_g, other, m, a), psi_on_morphism(std_g, other, m, b)));
      }
    }
  }
}
