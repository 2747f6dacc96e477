#include "shc/commands.hpp"

#include "shc/errors.hpp"
#include "shc/shcp.hpp"

namespace shc::commands {

namespace {

Field resolve_field(const Overrides& o, const io::json& doc) {
  if (o.field) return *o.field;
  if (doc.contains("field")) return io::field_from_json(doc.at("field"));
  if (doc.contains("coeff") && doc.at("coeff").is_object() && doc.at("coeff").contains("field")) {
    return io::field_from_json(doc.at("coeff").at("field"));
  }
  return Field::rationals();
}

void require(const io::json& doc, std::initializer_list<const char*> keys) {
  for (const char* key : keys) {
    if (!doc.contains(key)) throw ParseError(std::string("document: missing key '") + key + "'");
  }
}

CheckResult closure_failure(const ClosureViolation& e) {
  CheckResult r;
  r.report.checks = 1;
  r.report.failures.push_back({"closure", "matrices", e.what()});
  return r;
}

io::json pair_document(const io::json& doc, const std::filesystem::path& base) {
  if (doc.contains("pair")) return doc.at("pair");
  for (const char* key : {"pair_file", "pair-file"}) {
    if (!doc.contains(key)) continue;
    if (!doc.at(key).is_string()) throw ParseError(std::string("document: '") + key + "' must be a string");
    const io::json inner = io::load(base / doc.at(key).get<std::string>());
    io::check_document(inner, {"version", "field", "pair"});
    require(inner, {"pair"});
    return inner.at("pair");
  }
  throw ParseError("document: needs 'pair' or 'pair_file'");
}

}  // namespace

CheckResult check_liesuper(const io::json& doc, const Overrides& o) {
  io::check_document(doc, {"version", "field", "lie"});
  require(doc, {"lie"});
  LieSuperalgebraData l;
  try {
    l = io::lie_from_json(doc.at("lie"), resolve_field(o, doc));
  } catch (const ClosureViolation& e) {
    return closure_failure(e);
  }
  return {check_axioms(l), {}};
}

CheckResult check_shcp(const io::json& doc, const Overrides& o, int samples, std::uint64_t seed) {
  io::check_document(doc, {"version", "field", "pair"});
  require(doc, {"pair"});
  std::optional<HarishChandraPair> pair;
  try {
    pair = io::pair_from_json(doc.at("pair"), resolve_field(o, doc));
  } catch (const ClosureViolation& e) {
    return closure_failure(e);
  }
  PairReport r = validate_pair(*pair, samples, seed);
  return {std::move(r.checks), std::move(r.notes)};
}

NormalFormRun normal_form(const io::json& doc, const std::filesystem::path& base, const Overrides& o,
                          const std::string& oracle, bool trace) {
  if (oracle != "module" && oracle != "rewrite" && oracle != "both") {
    throw ParseError("oracle must be module, rewrite or both");
  }
  io::check_document(doc, {"version", "field", "pair", "pair_file", "pair-file", "coeff", "word"});
  require(doc, {"coeff", "word"});
  const Field f = resolve_field(o, doc);
  io::json coeff = doc.at("coeff");
  if (o.field && coeff.is_object()) coeff.erase("field");
  if (o.grassmann_rank && coeff.is_object()) coeff["rank"] = *o.grassmann_rank;
  const CoeffAlgebra alg = io::coeff_from_json(coeff, f);
  const HarishChandraPair pair = io::pair_from_json(pair_document(doc, base), f);
  const SuperGroup grp(pair, alg);
  const GroupWord word = io::word_from_json(doc.at("word"), pair, alg);

  NormalFormRun run;
  if (oracle == "rewrite" || oracle == "both" || trace) run.rewrite = grp.reorder_symbolic(word, trace);
  run.nf = oracle == "rewrite" ? run.rewrite->nf : grp.normal_form(word);
  if (oracle == "both") {
    if (run.rewrite->nf != run.nf) run.breaches.push_back("module extraction and rewriting disagree");
    // GL-type pairs also factor rho(word) directly
    if (const auto st = grp.strip_matrix(grp.rho(word))) {
      if (*st != run.nf) run.breaches.push_back("matrix stripping disagrees with module extraction");
    }
  }
  return run;
}

io::json NormalFormRun::to_json(bool with_trace) const {
  io::json out = io::normal_form_to_json(nf);
  if (with_trace && rewrite) {
    io::json steps = io::json::array();
    for (const auto& s : rewrite->trace) steps.push_back({{"rule", s.rule}, {"position", s.position}, {"word", s.word}});
    out["trace"] = steps;
    out["passes"] = rewrite->passes;
  }
  return out;
}

}  // namespace shc::commands
