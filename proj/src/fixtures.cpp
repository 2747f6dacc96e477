#include "shc/fixtures.hpp"

namespace shc::fixtures {

KMatrix elem(Field f, int n, int i, int j) {
  KMatrix m(f, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = Scalar::one(f);
  return m;
}

LieSuperalgebraData gl_lie(Field f, int p, int q) {
  std::vector<KMatrix> even, odd;
  const int n = p + q;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      ((i <= p) == (j <= p) ? even : odd).push_back(elem(f, n, i, j));
    }
  }
  return from_matrices(f, p, q, even, odd);
}

HarishChandraPair gl_pair(Field f, int p, int q) { return {gl_even_group(p, q), gl_lie(f, p, q)}; }

namespace {

HarishChandraPair gl11_with(Field f, const std::vector<KMatrix>& odd) {
  return {gl_even_group(1, 1), from_matrices(f, 1, 1, {elem(f, 2, 1, 1), elem(f, 2, 2, 2)}, odd)};
}

}  // namespace

HarishChandraPair gl11_twisted_pair(Field f) {
  return gl11_with(f, {elem(f, 2, 1, 2) + elem(f, 2, 2, 1), elem(f, 2, 1, 2)});
}

HarishChandraPair gl11_rotated_pair(Field f) {
  if (f.characteristic() == 2) throw StructureError("Y1 +- Y2 is not a basis in characteristic 2");
  return gl11_with(f, {elem(f, 2, 1, 2) + elem(f, 2, 2, 1), elem(f, 2, 1, 2) - elem(f, 2, 2, 1)});
}

HarishChandraPair gl11_reversed_pair(Field f) { return gl11_with(f, {elem(f, 2, 2, 1), elem(f, 2, 1, 2)}); }

HarishChandraPair line_pair(Field f) { return gl11_with(f, {elem(f, 2, 1, 2)}); }

HarishChandraPair borel_pair(Field f) {
  return {borel_group(2, 1),
          from_matrices(f, 2, 1, {elem(f, 3, 1, 1), elem(f, 3, 2, 2), elem(f, 3, 3, 3), elem(f, 3, 1, 2)},
                        {elem(f, 3, 1, 3), elem(f, 3, 2, 3), elem(f, 3, 3, 2)})};
}

HarishChandraPair ad_unstable_pair(Field f) {
  return {diagonal_torus(2, 1), from_matrices(f, 2, 1, {elem(f, 3, 1, 2)}, {elem(f, 3, 1, 3) + elem(f, 3, 3, 2)})};
}

HarishChandraPair even_only_pair(Field f, int p, int q) {
  std::vector<KMatrix> even;
  const int n = p + q;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if ((i <= p) == (j <= p)) even.push_back(elem(f, n, i, j));
    }
  }
  return {gl_even_group(p, q), from_matrices(f, p, q, even, {})};
}

std::vector<std::string> pair_names() {
  return {"gl11", "gl21", "gl22", "gl11-twisted", "gl11-rotated", "gl11-reversed",
          "line", "borel21", "ad-unstable", "even11"};
}

HarishChandraPair pair_by_name(const std::string& name, Field f) {
  if (name == "gl11") return gl_pair(f, 1, 1);
  if (name == "gl21") return gl_pair(f, 2, 1);
  if (name == "gl22") return gl_pair(f, 2, 2);
  if (name == "gl11-twisted") return gl11_twisted_pair(f);
  if (name == "gl11-rotated") return gl11_rotated_pair(f);
  if (name == "gl11-reversed") return gl11_reversed_pair(f);
  if (name == "line") return line_pair(f);
  if (name == "borel21") return borel_pair(f);
  if (name == "ad-unstable") return ad_unstable_pair(f);
  if (name == "even11") return even_only_pair(f, 1, 1);
  throw ParseError("unknown pair fixture '" + name + "'");
}

}  // namespace shc::fixtures
