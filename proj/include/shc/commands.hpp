#pragma once

// Fixture-driven commands shared by the shcpair CLI and the Python module.
// Each takes a parsed JSON document; field and rank overrides come from the
// command line.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "shc/gp.hpp"
#include "shc/io.hpp"
#include "shc/liesuper.hpp"

namespace shc::commands {

struct Overrides {
  std::optional<Field> field;
  std::optional<int> grassmann_rank;
};

struct CheckResult {
  AxiomReport report;
  std::vector<std::string> notes;
  bool ok() const { return report.ok(); }
};

/// check_axioms on {"version", "field"?, "lie"}. A "matrices" block whose span
/// is not closed is reported as a failed "closure" check.
CheckResult check_liesuper(const io::json& doc, const Overrides& o = {});
/// validate_pair on {"version", "field"?, "pair"}.
CheckResult check_shcp(const io::json& doc, const Overrides& o, int samples, std::uint64_t seed);

struct NormalFormRun {
  NormalForm nf;
  std::optional<RewriteResult> rewrite;
  /// Disagreements between oracles; empty when they agree.
  std::vector<std::string> breaches;
  io::json to_json(bool with_trace) const;
};

/// Normal form of {"version", "field"?, "pair" | "pair_file", "coeff", "word"}.
/// oracle is "module", "rewrite" or "both"; "both" also compares with matrix
/// stripping when the pair allows it. pair_file is resolved against base.
NormalFormRun normal_form(const io::json& doc, const std::filesystem::path& base, const Overrides& o,
                          const std::string& oracle, bool trace);

}  // namespace shc::commands
