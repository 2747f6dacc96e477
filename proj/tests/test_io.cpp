#include <gtest/gtest.h>

#include "shc/errors.hpp"
#include "shc/fixtures.hpp"
#include "shc/io.hpp"

using namespace shc;
using shc::io::json;

namespace {

const Field Q = Field::rationals();

bool same_constants(const LieSuperalgebraData& a, const LieSuperalgebraData& b) {
  if (a.even_dim() != b.even_dim() || a.odd_dim() != b.odd_dim()) return false;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      if (a.bracket(i, j) != b.bracket(i, j)) return false;
    }
  }
  for (int i = 0; i < a.odd_dim(); ++i) {
    if (a.two_op(i) != b.two_op(i)) return false;
  }
  return true;
}

}  // namespace

TEST(Io, LieRoundTrip) {
  for (const Field f : {Q, Field::prime(2), Field::prime(3)}) {
    for (const std::string name : {"gl11", "gl21", "borel21", "line"}) {
      const auto l = fixtures::pair_by_name(name, f).lie();
      const auto back = io::lie_from_json(io::lie_to_json(l), f);
      EXPECT_TRUE(same_constants(l, back)) << name << " over " << f.name();
      ASSERT_TRUE(back.rho().has_value());
      EXPECT_EQ(back.rho()->odd.size(), static_cast<std::size_t>(l.odd_dim()));
    }
  }
  // twisted gl(1|1) has a nonzero 2-operation in characteristic 2
  const auto tw = fixtures::pair_by_name("gl11-twisted", Field::prime(2)).lie();
  EXPECT_TRUE(same_constants(tw, io::lie_from_json(io::lie_to_json(tw), Field::prime(2))));
}

TEST(Io, RejectsUnknownKeys) {
  EXPECT_THROW(io::check_document(json{{"version", 1}, {"extra", 0}}, {"version"}), ParseError);
  EXPECT_THROW(io::check_document(json{{"version", 2}}, {"version"}), ParseError);
  EXPECT_THROW(io::check_document(json{{"field", "Q"}}, {"version", "field"}), ParseError);
  EXPECT_THROW(io::lie_from_json(json{{"builtin", "gl11"}, {"odd_dim", 1}}, Q), ParseError);
  EXPECT_THROW(io::coeff_from_json(json{{"type", "grassmann"}, {"rnk", 2}}, Q), ParseError);
  EXPECT_THROW(io::coeff_from_json(json{{"type", "clifford"}}, Q), ParseError);
  EXPECT_THROW(io::lie_from_json(json{{"builtin", "gl99"}}, Q), ParseError);
}

TEST(Io, ConstantsWithBadLabels) {
  const json lie = {{"even_dim", 1},
                    {"odd_dim", 1},
                    {"brackets", json::array({{{"a", "X1"}, {"b", "Y3"}, {"value", {{"Y1", "1"}}}}})}};
  EXPECT_THROW(io::lie_from_json(lie, Q), ParseError);
  const json odd_square = {{"even_dim", 1},
                           {"odd_dim", 1},
                           {"squares", json::array({{{"y", "Y1"}, {"value", {{"Y1", "1"}}}}})}};
  EXPECT_THROW(io::lie_from_json(odd_square, Q), ParseError);
}

TEST(Io, WordTokens) {
  const auto pair = fixtures::gl_pair(Q, 1, 1);
  const auto alg = CoeffAlgebra::grassmann(Q, 2);
  // explicit arrays: a 2x2 string matrix would otherwise read as an object
  const json m = json::array({json::array({"2", "0"}), json::array({"0", "1"})});
  const json w = json::array({{{"odd", 2}, {"eta", "x{1}"}}, {{"even", m}}});
  const GroupWord word = io::word_from_json(w, pair, alg);
  ASSERT_EQ(word.size(), 2u);
  EXPECT_FALSE(word[0].is_even());
  EXPECT_EQ(word[0].index, 1);
  EXPECT_EQ(word[0].eta, Coeff::parse(alg, "x{1}"));
  EXPECT_TRUE(word[1].is_even());
  EXPECT_EQ(word[1].g(0, 0), alg.constant(2));

  EXPECT_THROW(io::word_from_json(json::array({{{"odd", 1}, {"eta", "x{1}"}, {"sign", 1}}}), pair, alg),
               ParseError);
  EXPECT_THROW(io::word_from_json(json::array({{{"even", {{"1"}}}}}), pair, alg), ParseError);
}

TEST(Io, NormalFormSerialization) {
  const SuperGroup g(fixtures::gl_pair(Q, 1, 1), CoeffAlgebra::grassmann(Q, 2));
  const json j = io::normal_form_to_json(g.identity());
  EXPECT_EQ(j.at("version"), 1);
  EXPECT_EQ(j.at("etas"), json::array({"0", "0"}));
  EXPECT_EQ(j.at("g_plus")[0][0], "1 * x{}");
  EXPECT_EQ(j.at("g_plus")[0][1], "0");
}
