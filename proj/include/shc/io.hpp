#pragma once

// JSON fixtures and results. Every document carries "version": 1 and every
// object is checked against its key set; unknown keys raise ParseError.
//
// Scalars are strings ("-1/2", "3") or integers. Coefficients use the term
// syntax of Coeff::parse ("x{1,2} - 1/2 * x{3}"). Matrices are arrays of rows.
//
//   field:  "Q" | "F2" | "F3" | "F5" | ...
//   lie:    {"builtin": name}
//         | {"matrices": {"p", "q", "even": [M], "odd": [M]}}
//         | {"even_dim", "odd_dim", "brackets": [{"a", "b", "value", "antisymmetric"?}],
//            "squares": [{"y", "value"}], "rho"?: {"p", "q", "even", "odd"}}
//           with values as {"X1": "1", "Y2": "-1"} over the basis labels
//   pair:   {"builtin": name}
//         | {"group": {"name", "p", "q"}, "even": [M], "odd": [M]}
//   coeff:  {"type": "grassmann" | "super_numbers" | "dual", "rank"?, "field"?}
//   word:   [{"odd": i, "eta": c} | {"even": M}]   (i is 1-based)

#include <filesystem>
#include <string>

#include "json.hpp"
#include "shc/gp.hpp"
#include "shc/liesuper.hpp"
#include "shc/shcp.hpp"

namespace shc::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Reads and parses a file. Throws ParseError on I/O or syntax errors.
json load(const std::filesystem::path& path);
/// Checks "version" and the top-level key set.
void check_document(const json& doc, std::initializer_list<const char*> allowed);

Field field_from_json(const json& j);
LieSuperalgebraData lie_from_json(const json& j, Field f);
HarishChandraPair pair_from_json(const json& j, Field f);
CoeffAlgebra coeff_from_json(const json& j, Field f);
GroupWord word_from_json(const json& j, const HarishChandraPair& pair, const CoeffAlgebra& alg);

json scalar_matrix_to_json(const KMatrix& m);
json matrix_to_json(const SuperMatrix& m);
json normal_form_to_json(const NormalForm& nf);
json report_to_json(const AxiomReport& r, const std::vector<std::string>& notes = {});
json lie_to_json(const LieSuperalgebraData& l);

}  // namespace shc::io
