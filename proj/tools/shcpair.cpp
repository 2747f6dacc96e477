// shcpair: command-line front end.
//
// Exit codes: 0 pass, 1 mathematical failure, 2 usage or schema error,
// 3 invariant breach (oracles disagree, rewriting guard fired).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "shc/commands.hpp"
#include "shc/errors.hpp"
#include "shc/io.hpp"
#include "shc/suites.hpp"

namespace fs = std::filesystem;
using shc::io::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBreach = 3 };

struct Globals {
  std::string field;
  std::optional<int> rank;
  bool json = false;

  shc::commands::Overrides overrides() const {
    shc::commands::Overrides o;
    if (!field.empty()) o.field = shc::Field::parse(field);
    o.grassmann_rank = rank;
    return o;
  }
};

int report(const Globals& g, const shc::commands::CheckResult& r) {
  if (g.json) {
    std::cout << shc::io::report_to_json(r.report, r.notes).dump(2) << "\n";
  } else {
    std::cout << r.report.to_string() << "\n";
    for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
  }
  return r.ok() ? kPass : kFail;
}

std::string golden_text(const json& j) { return j.dump(2) + "\n"; }

int check_golden(const std::string& name, const std::string& canonical) {
  const char* dir = std::getenv("SHC_GOLDEN_DIR");
  const fs::path gpath = fs::path(dir ? dir : "tests/golden") / (name + ".json");
  const char* update = std::getenv("SHC_UPDATE_GOLDEN");
  if (update && std::string(update) == "1") {
    std::ofstream(gpath) << canonical;
    std::cerr << "wrote " << gpath.string() << "\n";
    return kPass;
  }
  std::ifstream in(gpath);
  if (!in) throw shc::ParseError("golden file not found: " + gpath.string());
  std::stringstream ss;
  ss << in.rdbuf();
  if (ss.str() != canonical) {
    std::cerr << "golden mismatch: " << gpath.string() << "\n";
    return kFail;
  }
  return kPass;
}

int normal_form(const Globals& g, const fs::path& path, bool trace, const std::string& oracle,
                const std::string& golden) {
  const auto run = shc::commands::normal_form(shc::io::load(path), path.parent_path(), g.overrides(), oracle, trace);
  if (trace && !g.json && run.rewrite) {
    int n = 0;
    for (const auto& s : run.rewrite->trace) {
      std::cout << "step " << ++n << ": " << s.rule << " at " << s.position << " -> " << s.word << "\n";
    }
    std::cout << "passes: " << run.rewrite->passes << "\n";
  }
  std::cout << run.to_json(trace && g.json).dump(2) << "\n";
  for (const auto& b : run.breaches) std::cerr << "invariant breach: " << b << "\n";
  if (!run.breaches.empty()) return kBreach;
  // goldens hold the bare normal form, never the trace
  return golden.empty() ? kPass : check_golden(golden, golden_text(run.to_json(false)));
}

int verify(const Globals& g, const std::string& suite, std::uint64_t seed) {
  const shc::suites::SuiteResult r = shc::suites::run(suite, seed);
  if (g.json) {
    json out = shc::io::report_to_json(r.report, r.notes);
    out["suite"] = r.name;
    out["seed"] = seed;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << r.to_string() << "\n";
  }
  return r.ok() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shcpair: supergroups from super Harish-Chandra pairs"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--field", g.field, "ground field: Q, F2, F3, F5, ...");
  app.add_option("--grassmann-rank", g.rank, "rank of the Grassmann coefficient algebra")->check(CLI::Range(0, 16));
  app.add_flag("--json", g.json, "machine-readable output");

  std::string file;
  auto* lie_cmd = app.add_subcommand("check-liesuper", "check the Lie superalgebra axioms of a fixture");
  lie_cmd->add_option("file", file)->required();

  int samples = 64;
  std::uint64_t seed = 1;
  auto* pair_cmd = app.add_subcommand("check-shcp", "validate a super Harish-Chandra pair fixture");
  pair_cmd->add_option("file", file)->required();
  pair_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
  pair_cmd->add_option("--seed", seed);

  bool trace = false;
  std::string oracle = "both", golden;
  auto* nf_cmd = app.add_subcommand("normal-form", "normal form of a word in G_P(A)");
  nf_cmd->add_option("file", file)->required();
  nf_cmd->add_flag("--trace", trace, "print the rewriting steps");
  nf_cmd->add_option("--oracle", oracle)->check(CLI::IsMember({"module", "rewrite", "both"}));
  nf_cmd->add_option("--golden", golden, "compare with $SHC_GOLDEN_DIR/NAME.json");

  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
  verify_cmd->add_option("suite", suite)->required();
  verify_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*lie_cmd) return report(g, shc::commands::check_liesuper(shc::io::load(file), g.overrides()));
    if (*pair_cmd) return report(g, shc::commands::check_shcp(shc::io::load(file), g.overrides(), samples, seed));
    if (*nf_cmd) return normal_form(g, file, trace, oracle, golden);
    if (*verify_cmd) return verify(g, suite, seed);
  } catch (const shc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const shc::StructureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const shc::NonTermination& e) {
    std::cerr << "invariant breach: " << e.what() << "\n";
    return kBreach;
  } catch (const shc::Error& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kFail;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
