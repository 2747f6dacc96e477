#include "shc/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "shc/fixtures.hpp"

namespace shc::io {

namespace {

void check_keys(const json& j, std::initializer_list<const char*> allowed, std::initializer_list<const char*> required,
                const std::string& ctx) {
  if (!j.is_object()) throw ParseError(ctx + ": expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (!ok.count(key)) throw ParseError(ctx + ": unknown key '" + key + "'");
  }
  for (const char* key : required) {
    if (!j.contains(key)) throw ParseError(ctx + ": missing key '" + key + "'");
  }
}

int get_int(const json& j, const char* key, const std::string& ctx) {
  if (!j.at(key).is_number_integer()) throw ParseError(ctx + ": '" + key + "' must be an integer");
  return j.at(key).get<int>();
}

std::string get_string(const json& j, const char* key, const std::string& ctx) {
  if (!j.at(key).is_string()) throw ParseError(ctx + ": '" + key + "' must be a string");
  return j.at(key).get<std::string>();
}

Scalar scalar_from_json(const json& j, Field f, const std::string& ctx) {
  if (j.is_number_integer()) return Scalar(f, j.get<long>());
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  throw ParseError(ctx + ": scalar must be a string or an integer");
}

KMatrix kmatrix_from_json(const json& j, Field f, int n, const std::string& ctx) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw ParseError(ctx + ": expected " + std::to_string(n) + " rows");
  }
  KMatrix m(f, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n) {
      throw ParseError(ctx + ": row " + std::to_string(i + 1) + " needs " + std::to_string(n) + " entries");
    }
    for (int k = 0; k < n; ++k) m(i, k) = scalar_from_json(j[i][k], f, ctx);
  }
  return m;
}

std::vector<KMatrix> kmatrices_from_json(const json& j, Field f, int n, const std::string& ctx) {
  if (!j.is_array()) throw ParseError(ctx + ": expected a list of matrices");
  std::vector<KMatrix> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(kmatrix_from_json(j[k], f, n, ctx + "[" + std::to_string(k) + "]"));
  }
  return out;
}

int label_index(const LieSuperalgebraData& l, const std::string& label, const std::string& ctx) {
  for (int a = 0; a < l.dim(); ++a) {
    if (l.label(a) == label) return a;
  }
  throw ParseError(ctx + ": unknown basis label '" + label + "'");
}

LieVec vec_from_json(const LieSuperalgebraData& l, const json& j, const std::string& ctx) {
  if (!j.is_object()) throw ParseError(ctx + ": value must map basis labels to scalars");
  LieVec v = l.zero();
  for (const auto& [key, value] : j.items()) v[label_index(l, key, ctx)] = scalar_from_json(value, l.field(), ctx);
  return v;
}

}  // namespace

json load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void check_document(const json& doc, std::initializer_list<const char*> allowed) {
  check_keys(doc, allowed, {"version"}, "document");
  if (!doc.at("version").is_number_integer() || doc.at("version").get<int>() != kSchemaVersion) {
    throw ParseError("document: unsupported version (expected " + std::to_string(kSchemaVersion) + ")");
  }
}

Field field_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("field must be a string");
  return Field::parse(j.get<std::string>());
}

LieSuperalgebraData lie_from_json(const json& j, Field f) {
  const std::string ctx = "lie";
  if (j.contains("builtin")) {
    check_keys(j, {"builtin"}, {"builtin"}, ctx);
    return fixtures::pair_by_name(get_string(j, "builtin", ctx), f).lie();
  }
  if (j.contains("matrices")) {
    check_keys(j, {"matrices"}, {"matrices"}, ctx);
    const json& m = j.at("matrices");
    check_keys(m, {"p", "q", "even", "odd"}, {"p", "q", "even", "odd"}, "lie.matrices");
    const int p = get_int(m, "p", ctx), q = get_int(m, "q", ctx);
    return from_matrices(f, p, q, kmatrices_from_json(m.at("even"), f, p + q, "lie.matrices.even"),
                         kmatrices_from_json(m.at("odd"), f, p + q, "lie.matrices.odd"));
  }
  check_keys(j, {"even_dim", "odd_dim", "brackets", "squares", "rho"}, {"even_dim", "odd_dim"}, ctx);
  const int de = get_int(j, "even_dim", ctx), dodd = get_int(j, "odd_dim", ctx);
  if (de < 0 || dodd < 0 || dodd > 16) throw ParseError(ctx + ": dimensions out of range");
  LieSuperalgebraData l(f, de, dodd);
  if (j.contains("brackets")) {
    for (const auto& e : j.at("brackets")) {
      check_keys(e, {"a", "b", "value", "antisymmetric"}, {"a", "b", "value"}, "lie.brackets");
      const int a = label_index(l, get_string(e, "a", ctx), ctx);
      const int b = label_index(l, get_string(e, "b", ctx), ctx);
      const LieVec v = vec_from_json(l, e.at("value"), "lie.brackets");
      const bool anti = !e.contains("antisymmetric") || e.at("antisymmetric").get<bool>();
      if (anti) {
        l.set_bracket_antisymmetric(a, b, v);
      } else {
        l.set_bracket(a, b, v);
      }
    }
  }
  if (j.contains("squares")) {
    for (const auto& e : j.at("squares")) {
      check_keys(e, {"y", "value"}, {"y", "value"}, "lie.squares");
      const int y = label_index(l, get_string(e, "y", ctx), ctx);
      if (!l.is_odd(y)) throw ParseError("lie.squares: 2-operation is defined on odd basis vectors only");
      const LieVec v = vec_from_json(l, e.at("value"), "lie.squares");
      LieVec even(v.begin(), v.begin() + de);
      for (int k = de; k < l.dim(); ++k) {
        if (!v[k].is_zero()) throw ParseError("lie.squares: Y^<2> must be even");
      }
      l.set_two_op(y - de, even);
    }
  }
  if (j.contains("rho")) {
    const json& r = j.at("rho");
    check_keys(r, {"p", "q", "even", "odd"}, {"p", "q", "even", "odd"}, "lie.rho");
    Representation rep;
    rep.p = get_int(r, "p", ctx);
    rep.q = get_int(r, "q", ctx);
    rep.even = kmatrices_from_json(r.at("even"), f, rep.p + rep.q, "lie.rho.even");
    rep.odd = kmatrices_from_json(r.at("odd"), f, rep.p + rep.q, "lie.rho.odd");
    l.set_rho(std::move(rep));
  }
  return l;
}

HarishChandraPair pair_from_json(const json& j, Field f) {
  const std::string ctx = "pair";
  if (j.contains("builtin")) {
    check_keys(j, {"builtin"}, {"builtin"}, ctx);
    return fixtures::pair_by_name(get_string(j, "builtin", ctx), f);
  }
  check_keys(j, {"group", "even", "odd"}, {"group", "even", "odd"}, ctx);
  const json& g = j.at("group");
  check_keys(g, {"name", "p", "q"}, {"name", "p", "q"}, "pair.group");
  const int p = get_int(g, "p", ctx), q = get_int(g, "q", ctx);
  if (p < 0 || q < 0 || p + q == 0 || p + q > 8) throw ParseError("pair.group: shape out of range");
  GroupDescriptor desc = group_by_name(get_string(g, "name", ctx), p, q);
  return {std::move(desc), from_matrices(f, p, q, kmatrices_from_json(j.at("even"), f, p + q, "pair.even"),
                                         kmatrices_from_json(j.at("odd"), f, p + q, "pair.odd"))};
}

CoeffAlgebra coeff_from_json(const json& j, Field f) {
  check_keys(j, {"type", "rank", "field"}, {"type"}, "coeff");
  if (j.contains("field") && field_from_json(j.at("field")) != f) {
    throw ParseError("coeff: field differs from the document field");
  }
  const std::string type = get_string(j, "type", "coeff");
  if (type == "grassmann") {
    const int rank = j.contains("rank") ? get_int(j, "rank", "coeff") : 2;
    if (rank < 0 || rank > 16) throw ParseError("coeff: Grassmann rank must be in 0..16");
    return CoeffAlgebra::grassmann(f, rank);
  }
  if (type == "super_numbers") return CoeffAlgebra::super_numbers(f);
  if (type == "dual") {
    const int rank = j.contains("rank") ? get_int(j, "rank", "coeff") : 0;
    return CoeffAlgebra::dual_extension(CoeffAlgebra::grassmann(f, rank));
  }
  throw ParseError("coeff: unknown type '" + type + "'");
}

GroupWord word_from_json(const json& j, const HarishChandraPair& pair, const CoeffAlgebra& alg) {
  if (!j.is_array()) throw ParseError("word: expected a list of tokens");
  GroupWord w;
  const int n = pair.p() + pair.q();
  for (const auto& t : j) {
    if (t.contains("odd")) {
      check_keys(t, {"odd", "eta"}, {"odd", "eta"}, "word token");
      w.push_back(Token::odd(get_int(t, "odd", "word token") - 1,
                             Coeff::parse(alg, get_string(t, "eta", "word token"))));
    } else {
      check_keys(t, {"even"}, {"even"}, "word token");
      const json& m = t.at("even");
      if (!m.is_array() || static_cast<int>(m.size()) != n) throw ParseError("word token: even matrix has wrong shape");
      SuperMatrix g(alg, pair.p(), pair.q());
      for (int r = 0; r < n; ++r) {
        if (!m[r].is_array() || static_cast<int>(m[r].size()) != n) {
          throw ParseError("word token: even matrix has wrong shape");
        }
        for (int c = 0; c < n; ++c) {
          g(r, c) = m[r][c].is_number_integer() ? alg.constant(m[r][c].get<long>())
                                                : Coeff::parse(alg, m[r][c].get<std::string>());
        }
      }
      w.push_back(Token::even(std::move(g)));
    }
  }
  return w;
}

json scalar_matrix_to_json(const KMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_to_json(const SuperMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.size(); ++k) row.push_back(m(i, k).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json normal_form_to_json(const NormalForm& nf) {
  json etas = json::array();
  for (const auto& e : nf.etas) etas.push_back(e.to_string());
  return {{"version", kSchemaVersion}, {"etas", etas}, {"g_plus", matrix_to_json(nf.g_plus)}};
}

json report_to_json(const AxiomReport& r, const std::vector<std::string>& notes) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"family", f.axiom}, {"where", f.where}, {"detail", f.detail}});
  return {{"version", kSchemaVersion}, {"ok", r.ok()}, {"checks", r.checks}, {"failures", failures}, {"notes", notes}};
}

json lie_to_json(const LieSuperalgebraData& l) {
  json brackets = json::array();
  auto vec = [&](const LieVec& v) {
    json o = json::object();
    for (int k = 0; k < l.dim(); ++k) {
      if (!v[k].is_zero()) o[l.label(k)] = v[k].to_string();
    }
    return o;
  };
  for (int a = 0; a < l.dim(); ++a) {
    for (int b = a; b < l.dim(); ++b) {
      const LieVec& v = l.bracket(a, b);
      bool zero = true;
      for (const auto& c : v) zero = zero && c.is_zero();
      if (!zero) brackets.push_back({{"a", l.label(a)}, {"b", l.label(b)}, {"value", vec(v)}});
    }
  }
  json squares = json::array();
  for (int i = 0; i < l.odd_dim(); ++i) {
    LieVec v = l.zero();
    for (int k = 0; k < l.even_dim(); ++k) v[k] = l.two_op(i)[k];
    squares.push_back({{"y", l.label(l.y(i))}, {"value", vec(v)}});
  }
  json out = {{"even_dim", l.even_dim()}, {"odd_dim", l.odd_dim()}, {"brackets", brackets}, {"squares", squares}};
  if (l.rho()) {
    json even = json::array(), odd = json::array();
    for (const auto& m : l.rho()->even) even.push_back(scalar_matrix_to_json(m));
    for (const auto& m : l.rho()->odd) odd.push_back(scalar_matrix_to_json(m));
    out["rho"] = {{"p", l.rho()->p}, {"q", l.rho()->q}, {"even", even}, {"odd", odd}};
  }
  return out;
}

}  // namespace shc::io
