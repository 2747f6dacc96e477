#pragma once

// Built-in pairs used by tests, the CLI and the acceptance run.

#include <string>
#include <vector>

#include "shc/shcp.hpp"

namespace shc::fixtures {

/// E_ij on k^{p|q}, 1-based.
KMatrix elem(Field f, int n, int i, int j);

/// gl(p|q) with even basis the same-block E_ij and odd basis the cross-block
/// E_ij, both in row-major order.
LieSuperalgebraData gl_lie(Field f, int p, int q);
/// (GL_p x GL_q, gl(p|q)).
HarishChandraPair gl_pair(Field f, int p, int q);
/// gl(1|1) with odd basis {E12 + E21, E12}; Y1^<2> = I.
HarishChandraPair gl11_twisted_pair(Field f);
/// gl(1|1) with odd basis {E12 + E21, E12 - E21}. Needs odd characteristic.
HarishChandraPair gl11_rotated_pair(Field f);
/// gl(1|1) with odd basis {E21, E12}.
HarishChandraPair gl11_reversed_pair(Field f);
/// (GL_1 x GL_1, span{E11, E22 | E12}).
HarishChandraPair line_pair(Field f);
/// Upper-triangular (2|1) pair: even {E11, E22, E33, E12}, odd {E13, E23, E32}.
HarishChandraPair borel_pair(Field f);
/// Diagonal torus of GL_2 x GL_1 with g = span{E12 | E13 + E32}: the odd line
/// is not stable under the torus.
HarishChandraPair ad_unstable_pair(Field f);
/// (GL_p x GL_q, gl_p + gl_q) with no odd part.
HarishChandraPair even_only_pair(Field f, int p, int q);

/// Names accepted by pair_by_name.
std::vector<std::string> pair_names();
/// "gl11", "gl21", "gl22", "gl11-twisted", "gl11-rotated", "gl11-reversed",
/// "line", "borel21", "ad-unstable", "even11". Throws ParseError.
HarishChandraPair pair_by_name(const std::string& name, Field f);

}  // namespace shc::fixtures
