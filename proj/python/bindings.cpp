// Python module shcpair._core. Documents go in and out as JSON text; the
// package __init__ wraps them with json.loads / json.dumps.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shc/coeff.hpp"
#include "shc/commands.hpp"
#include "shc/errors.hpp"
#include "shc/fixtures.hpp"
#include "shc/io.hpp"
#include "shc/suites.hpp"

namespace py = pybind11;
using shc::io::json;

namespace {

shc::commands::Overrides overrides(const std::optional<std::string>& field, std::optional<int> rank) {
  shc::commands::Overrides o;
  if (field) o.field = shc::Field::parse(*field);
  o.grassmann_rank = rank;
  return o;
}

std::string check_json(const shc::commands::CheckResult& r) {
  return shc::io::report_to_json(r.report, r.notes).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact supergroups from super Harish-Chandra pairs";

  static py::exception<shc::Error> base(m, "ShcError", PyExc_RuntimeError);
  static py::exception<shc::ParseError> parse(m, "ParseError", base.ptr());
  static py::exception<shc::NonTermination> nonterm(m, "NonTermination", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const shc::ParseError& e) {
      py::set_error(parse, e.what());
    } catch (const shc::NonTermination& e) {
      py::set_error(nonterm, e.what());
    } catch (const shc::Error& e) {
      py::set_error(base, e.what());
    } catch (const json::exception& e) {
      py::set_error(parse, e.what());
    }
  });

  m.def(
      "check_liesuper",
      [](const std::string& doc, std::optional<std::string> field) {
        return check_json(shc::commands::check_liesuper(json::parse(doc), overrides(field, std::nullopt)));
      },
      py::arg("doc"), py::arg("field") = py::none());

  m.def(
      "check_shcp",
      [](const std::string& doc, int samples, std::uint64_t seed, std::optional<std::string> field) {
        return check_json(shc::commands::check_shcp(json::parse(doc), overrides(field, std::nullopt), samples, seed));
      },
      py::arg("doc"), py::arg("samples") = 64, py::arg("seed") = 1, py::arg("field") = py::none());

  m.def(
      "normal_form",
      [](const std::string& doc, const std::string& base, const std::string& oracle, bool trace,
         std::optional<std::string> field, std::optional<int> rank) {
        const auto run = shc::commands::normal_form(json::parse(doc), base, overrides(field, rank), oracle, trace);
        if (!run.breaches.empty()) throw shc::Error("invariant breach: " + run.breaches.front());
        return run.to_json(trace).dump();
      },
      py::arg("doc"), py::arg("base") = ".", py::arg("oracle") = "both", py::arg("trace") = false,
      py::arg("field") = py::none(), py::arg("grassmann_rank") = py::none());

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed) {
        shc::suites::SuiteResult r;
        {
          py::gil_scoped_release release;
          r = shc::suites::run(suite, seed);
        }
        json out = shc::io::report_to_json(r.report, r.notes);
        out["suite"] = r.name;
        out["seed"] = seed;
        return out.dump();
      },
      py::arg("suite"), py::arg("seed") = 1);

  m.def("suite_names", &shc::suites::names);
  m.def("pair_names", &shc::fixtures::pair_names);

  m.def(
      "grassmann_product",
      [](const std::vector<std::string>& factors, int rank, const std::string& field) {
        const auto alg = shc::CoeffAlgebra::grassmann(shc::Field::parse(field), rank);
        shc::Coeff acc = alg.constant(1);
        for (const auto& f : factors) acc = acc * shc::Coeff::parse(alg, f);
        return acc.to_string();
      },
      py::arg("factors"), py::arg("rank"), py::arg("field") = "Q");
}
