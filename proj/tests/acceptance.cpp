// Runs the ten acceptance criteria and prints one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.

#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shc/suites.hpp"

using namespace shc;
using namespace shc::suites;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::optional<double> budget;  // seconds
  std::function<std::vector<SuiteResult>()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  const Field q = Field::rationals(), f2 = Field::prime(2), f3 = Field::prime(3);
  const std::uint64_t seed = 1;

  const std::vector<Criterion> criteria{
      {1, "one-parameter commutation identities", 30.0, [&] { return std::vector{tang_group({q, f2, f3}, 200, seed)}; }},
      {2, "GL(2|2)(L3) splitting", 10.0, [&] { return std::vector{gl_split(q, 2, 2, 3, 300, seed)}; }},
      {3, "oracle triangle", 60.0, [&] { return std::vector{oracle_triangle({"gl11", "gl21"}, q, 500, seed)}; }},
      {4, "uniqueness and group axioms", 30.0, [&] { return std::vector{group_axioms("gl21", q, 200, 100, seed)}; }},
      {5, "round trips", 30.0,
       [&] { return std::vector{roundtrip({"gl11", "gl21", "borel21", "line", "even11"}, q, 200, seed)}; }},
      {6, "PBW and induced module", 10.0,
       [&] { return std::vector{pbw({"gl11", "line", "borel21", "gl11-twisted"}, q, 100, seed)}; }},
      {7, "semidirect A-point splittings", 10.0, [&] { return std::vector{semidirect(q, 100, seed)}; }},
      {8, "rewriting within N+1 passes", std::nullopt,
       [&] {
         return std::vector{termination(q, 20, seed), termination(f2, 20, seed), termination(f3, 20, seed)};
       }},
      {9, "characteristic 2 and 3", std::nullopt, [&] { return std::vector{charfree(seed)}; }},
      {10, "basis independence", std::nullopt,
       [&] { return std::vector{basis_independence(q, 100, seed), basis_independence(f3, 100, seed)}; }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::vector<SuiteResult> results;
    std::string error;
    try {
      results = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double seconds = 0;
    std::size_t checks = 0;
    bool ok = error.empty();
    for (const auto& r : results) {
      seconds += r.seconds;
      checks += r.report.checks;
      ok = ok && r.ok();
    }
    const bool in_budget = !c.budget || seconds < *c.budget;
    ok = ok && in_budget;
    if (!ok) ++failed;
    std::printf("%s  %2d  %-34s %8zu checks  %6.2f s", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), checks, seconds);
    if (c.budget) std::printf(" (budget %.0f s)", *c.budget);
    std::printf("\n");
    if (!error.empty()) std::printf("      error: %s\n", error.c_str());
    if (!in_budget) std::printf("      over the time budget\n");
    for (const auto& r : results) {
      if (!r.ok() || verbose) std::printf("      %s\n", r.to_string().c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
