#pragma once

// Property suites shared by `shcpair verify` and the acceptance run. Every
// suite is deterministic in its seed.

#include <cstdint>
#include <string>
#include <vector>

#include "shc/liesuper.hpp"

namespace shc::suites {

struct SuiteResult {
  std::string name;
  AxiomReport report;
  std::vector<std::string> notes;
  double seconds = 0;
  bool ok() const { return report.ok(); }
  std::string to_string() const;
};

/// The commutation identities of one-parameter elements, `instances` random
/// draws each, as supermatrix identities in gl(1|1), gl(2|1), gl(2|2) over
/// Lambda_3 and Lambda_4, and again on normal forms for gl(1|1), gl(2|1).
SuiteResult tang_group(const std::vector<Field>& fields, int instances, std::uint64_t seed);
/// gl_split and gl_split_left on random GL(p|q)(Lambda_n) points.
SuiteResult gl_split(Field f, int p, int q, int rank, int samples, std::uint64_t seed);
/// normal_form = reorder_symbolic (= strip_matrix where applicable) on
/// random words of length 1..12 over Lambda_4, `words` in total, spread over
/// the named fixtures.
SuiteResult oracle_triangle(const std::vector<std::string>& pairs, Field f, int words, std::uint64_t seed);
/// Associativity, inverses and unit on random normal forms, and distinct
/// actions of perturbed normal forms on the induced module of V0 = k^{p|q}.
SuiteResult group_axioms(const std::string& pair, Field f, int samples, int perturbations, std::uint64_t seed);
/// Phi(Psi(P)) on the named fixtures and Psi(Phi(GL(1|1))) over Lambda_3.
SuiteResult roundtrip(const std::vector<std::string>& pairs, Field f, int gl_samples, std::uint64_t seed);
/// Carrier dimension, module axioms and eta-extraction on the named fixtures.
SuiteResult pbw(const std::vector<std::string>& pairs, Field f, int tuples, std::uint64_t seed);
/// A-point splittings g = g_bar g_ker for GL(1|1) and for the gl(1|1) G_P
/// over k[eta] and Lambda_3.
SuiteResult semidirect(Field f, int samples, std::uint64_t seed);
/// reorder_symbolic on every valid fixture and Grassmann rank 1..5: passes
/// stay within N + 1 and the guard never fires.
SuiteResult termination(Field f, int words, std::uint64_t seed);
/// Group tables of gl(1|1) agree under {Y1 + Y2, Y1 - Y2} and under order
/// reversal, compared through the change-of-basis morphism.
SuiteResult basis_independence(Field f, int samples, std::uint64_t seed);
/// tang-group, oracle triangle, group axioms and pbw over F2 and F3,
/// including the twisted gl(1|1) fixture with nonzero 2-operation.
SuiteResult charfree(std::uint64_t seed);

/// Names accepted by run().
std::vector<std::string> names();
/// Default-sized run of a named suite. Throws ParseError for unknown names.
SuiteResult run(const std::string& name, std::uint64_t seed);

}  // namespace shc::suites
