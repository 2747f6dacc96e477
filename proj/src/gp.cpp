#include "shc/gp.hpp"

#include <algorithm>
#include <sstream>

namespace shc {

Token Token::even(SuperMatrix g) {
  Token t;
  t.kind = Kind::Even;
  t.g = std::move(g);
  return t;
}

Token Token::odd(int index, Coeff eta) {
  Token t;
  t.kind = Kind::Odd;
  t.index = index;
  t.eta = std::move(eta);
  return t;
}

std::string Token::to_string() const {
  if (is_even()) return "g" + g.to_string();
  return "(1 + (" + eta.to_string() + ") Y" + std::to_string(index + 1) + ")";
}

bool NormalForm::is_identity() const {
  return g_plus.is_identity() && std::all_of(etas.begin(), etas.end(), [](const Coeff& c) { return c.is_zero(); });
}

std::string NormalForm::to_string() const {
  std::ostringstream os;
  os << "etas = (";
  for (std::size_t i = 0; i < etas.size(); ++i) os << (i ? ", " : "") << etas[i].to_string();
  os << "), g+ = " << g_plus.to_string();
  return os.str();
}

SuperGroup::SuperGroup(HarishChandraPair pair, CoeffAlgebra alg)
    : pair_(std::move(pair)),
      alg_(std::move(alg)),
      exterior_(pair_.lie(), EvenModule::trivial(pair_.field(), pair_.even_dim())) {
  if (alg_.field() != pair_.field()) throw StructureError("coefficient field differs from the pair's field");
  odd_span_full_ = pair_.odd_dim() == 2 * pair_.p() * pair_.q();
}

void SuperGroup::check_token(const Token& t) const {
  if (t.is_even()) {
    if (t.g.algebra() != alg_ || t.g.p() != pair_.p() || t.g.q() != pair_.q()) {
      throw StructureError("even token has the wrong shape or coefficient algebra");
    }
    if (!pair_.group().contains(t.g)) {
      throw MembershipViolation("even token is not in " + pair_.group().name + ": " + t.g.to_string());
    }
  } else {
    if (t.index < 0 || t.index >= pair_.odd_dim()) throw StructureError("odd token index out of range");
    if (t.eta.algebra() != alg_) throw StructureError("odd token coefficient lives in another algebra");
    if (!t.eta.is_odd()) throw StructureError("odd token coefficient is not odd: " + t.eta.to_string());
  }
}

void SuperGroup::validate(const GroupWord& w) const {
  if (w.size() > kMaxWordLength) throw StructureError("word longer than 10000 tokens");
  for (const auto& t : w) check_token(t);
}

SuperMatrix SuperGroup::rho(const GroupWord& w) const {
  SuperMatrix m = SuperMatrix::identity(alg_, pair_.p(), pair_.q());
  for (const auto& t : w) m = m * (t.is_even() ? t.g : pair_.odd_factor(t.eta, t.index));
  return m;
}

std::vector<std::vector<Coeff>> SuperGroup::ad_forward(const SuperMatrix& g) const {
  std::vector<std::vector<Coeff>> ad;
  for (int s = 0; s < pair_.odd_dim(); ++s) ad.push_back(pair_.ad_coords_forward(g, s));
  return ad;
}

SuperMatrix SuperGroup::exterior_action(const GroupWord& w) const {
  validate(w);
  const SuperMatrix one = SuperMatrix::identity(alg_, 1, 0);
  SuperMatrix m = SuperMatrix::identity(alg_, exterior_.even_dim(), exterior_.odd_dim());
  for (const auto& t : w) {
    m = m * (t.is_even() ? exterior_.even_matrix(ad_forward(t.g), one) : exterior_.odd_matrix(t.eta, t.index));
  }
  return m;
}

NormalForm SuperGroup::normal_form(const GroupWord& w) const {
  validate(w);
  const SuperMatrix one = SuperMatrix::identity(alg_, 1, 0);
  std::vector<Coeff> v = exterior_.basis_vector(alg_, 0);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->is_even()) {
      v = exterior_.even_matrix(ad_forward(it->g), one).apply(v);
    } else {
      v = exterior_.apply_odd(it->eta, it->index, v);
    }
  }
  NormalForm nf;
  SuperMatrix u = SuperMatrix::identity(alg_, pair_.p(), pair_.q());
  for (int i = 0; i < pair_.odd_dim(); ++i) {
    nf.etas.push_back(v[exterior_.index(InducedModule::Subset{1} << i, 0)]);
    u = u * pair_.odd_factor(nf.etas.back(), i);
  }
  nf.g_plus = inverse(u) * rho(w);
  if (!nf.g_plus.is_even_block_diagonal() || !pair_.group().contains(nf.g_plus)) {
    throw MembershipViolation("normal form: the even remainder is not in " + pair_.group().name + ": " +
                              nf.g_plus.to_string());
  }
  return nf;
}

namespace {

struct Slot {
  Token tok;
  int gen = 0;
};

std::string render(const std::vector<Slot>& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& t : w) s += (s.empty() ? "" : " ") + t.tok.to_string();
  return s;
}

}  // namespace

// Rewriting toward (odd tokens, strictly increasing index) . (one even
// token). Each step fixes the leftmost violation:
//   drop:       (1 + 0 Y) -> 1, g = I -> 1
//   merge-even: g h -> (gh)
//   cross:      g (1 + eta Y_i) -> prod_j (1 + eta c_j Y_j) g,  c = Ad(g)(Y_i)
//   swap:       (1 + a Y_i)(1 + b Y_j) -> (1 + b Y_j)(1 + a Y_i)(1 + ba [Y_i,Y_j]),  i > j
//   square:     (1 + a Y)(1 + b Y) -> (1 + (a+b) Y)(1 + ba Y^<2>)
// The corrections commute with their neighbours since their coefficients
// are killed by a and b. A token's generation counts how many corrections
// separate it from the input; the coefficients of generation g lie in the
// 2g-th power of the ideal of the input etas, which bounds the passes.
RewriteResult SuperGroup::reorder_symbolic(const GroupWord& input, bool trace) const {
  validate(input);
  const int p = pair_.p(), q = pair_.q();
  const int bound = alg_.nilpotency_bound();
  const long step_cap = 2000000;
  const auto& l = pair_.lie();

  RewriteResult res;
  std::vector<Slot> w;
  for (const auto& t : input) w.push_back({t, 0});
  int max_gen = 0;

  auto note = [&](const std::string& rule, std::size_t k) {
    ++res.steps;
    if (res.steps > step_cap) throw NonTermination("reorder_symbolic: step cap exceeded");
    if (max_gen > bound) {
      throw NonTermination("reorder_symbolic: pass bound " + std::to_string(bound + 1) + " exceeded");
    }
    if (trace) res.trace.push_back({rule, static_cast<int>(k), render(w)});
  };
  auto correction = [&](const Coeff& c, const LieVec& v, int gen) {
    Slot s{Token::even(SuperMatrix::identity(alg_, p, q) + pair_.rho(alg_, v).scaled(c)), gen};
    max_gen = std::max(max_gen, gen);
    return s;
  };

  for (;;) {
    bool changed = false;
    for (std::size_t k = 0; k < w.size() && !changed; ++k) {
      const Token& a = w[k].tok;
      if ((a.is_even() && a.g.is_identity()) || (!a.is_even() && a.eta.is_zero())) {
        w.erase(w.begin() + static_cast<long>(k));
        note("drop", k);
        changed = true;
        break;
      }
      if (k + 1 >= w.size()) break;
      const Token& b = w[k + 1].tok;
      if (a.is_even() && b.is_even()) {
        Slot merged{Token::even(a.g * b.g), std::min(w[k].gen, w[k + 1].gen)};
        w.erase(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k) + 2);
        w.insert(w.begin() + static_cast<long>(k), std::move(merged));
        note("merge-even", k);
        changed = true;
      } else if (a.is_even()) {
        const auto c = pair_.ad_coords_forward(a.g, b.index);
        const int ge = w[k].gen, gn = w[k + 1].gen;
        std::vector<Slot> rep;
        for (int j = 0; j < pair_.odd_dim(); ++j) {
          Coeff e = b.eta * c[j];
          if (e.is_zero()) continue;
          const int gen = j == b.index ? gn : std::max(gn, ge);
          max_gen = std::max(max_gen, gen);
          rep.push_back({Token::odd(j, std::move(e)), gen});
        }
        rep.push_back(w[k]);
        w.erase(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k) + 2);
        w.insert(w.begin() + static_cast<long>(k), rep.begin(), rep.end());
        note("cross", k);
        changed = true;
      } else if (!b.is_even() && a.index > b.index) {
        const int gen = std::max(w[k].gen, w[k + 1].gen) + 1;
        Slot corr = correction(b.eta * a.eta, l.bracket(l.y(a.index), l.y(b.index)), gen);
        std::swap(w[k], w[k + 1]);
        w.insert(w.begin() + static_cast<long>(k) + 2, std::move(corr));
        note("swap", k);
        changed = true;
      } else if (!b.is_even() && a.index == b.index) {
        const int gen = std::max(w[k].gen, w[k + 1].gen) + 1;
        Slot corr = correction(b.eta * a.eta, l.two_op(l.unit(l.y(a.index))), gen);
        Slot merged{Token::odd(a.index, a.eta + b.eta), std::min(w[k].gen, w[k + 1].gen)};
        w[k] = std::move(merged);
        w[k + 1] = std::move(corr);
        note("square", k);
        changed = true;
      }
    }
    if (!changed) break;
  }

  res.passes = max_gen + 1;
  res.nf.etas.assign(static_cast<std::size_t>(pair_.odd_dim()), alg_.zero());
  res.nf.g_plus = SuperMatrix::identity(alg_, p, q);
  for (const auto& s : w) {
    if (s.tok.is_even()) {
      res.nf.g_plus = s.tok.g;
    } else {
      res.nf.etas[static_cast<std::size_t>(s.tok.index)] = s.tok.eta;
    }
  }
  return res;
}

std::optional<NormalForm> SuperGroup::strip_matrix(const SuperMatrix& m) const {
  if (!odd_span_full_) return std::nullopt;
  const int p = pair_.p(), q = pair_.q();
  NormalForm nf;
  nf.etas.assign(static_cast<std::size_t>(pair_.odd_dim()), alg_.zero());
  for (int iter = 0; iter <= alg_.nilpotency_bound() + 1; ++iter) {
    SuperMatrix u = SuperMatrix::identity(alg_, p, q);
    for (int i = 0; i < pair_.odd_dim(); ++i) u = u * pair_.odd_factor(nf.etas[i], i);
    const SuperMatrix rest = inverse(u) * m;
    const SuperMatrix off = gl_split_left(rest).odd - SuperMatrix::identity(alg_, p, q);
    if (off.is_zero()) {
      nf.g_plus = rest;
      return nf;
    }
    const auto delta = pair_.odd_coords(off);
    if (!delta) throw SpanViolation("strip_matrix: odd part outside the odd span");
    for (int i = 0; i < pair_.odd_dim(); ++i) nf.etas[i] += (*delta)[i];
  }
  throw NonTermination("strip_matrix did not converge");
}

GroupWord SuperGroup::expand(const NormalForm& nf) const {
  GroupWord w;
  for (int i = 0; i < pair_.odd_dim(); ++i) {
    if (!nf.etas[i].is_zero()) w.push_back(Token::odd(i, nf.etas[i]));
  }
  if (!nf.g_plus.is_identity()) w.push_back(Token::even(nf.g_plus));
  return w;
}

NormalForm SuperGroup::identity() const {
  return {std::vector<Coeff>(static_cast<std::size_t>(pair_.odd_dim()), alg_.zero()),
          SuperMatrix::identity(alg_, pair_.p(), pair_.q())};
}

NormalForm SuperGroup::mul(const NormalForm& a, const NormalForm& b) const {
  GroupWord w = expand(a);
  const GroupWord wb = expand(b);
  w.insert(w.end(), wb.begin(), wb.end());
  return normal_form(w);
}

NormalForm SuperGroup::inv(const NormalForm& a) const {
  GroupWord w{Token::even(inverse(a.g_plus))};
  for (int i = pair_.odd_dim() - 1; i >= 0; --i) {
    if (!a.etas[i].is_zero()) w.push_back(Token::odd(i, -a.etas[i]));
  }
  return normal_form(w);
}

NormalForm SuperGroup::commutator(const NormalForm& a, const NormalForm& b) const {
  return mul(mul(a, b), mul(inv(a), inv(b)));
}

GroupWord SuperGroup::random_word(Rng& rng, int length) const {
  GroupWord w;
  for (int k = 0; k < length; ++k) {
    if (pair_.odd_dim() == 0 || rng.chance(1, 3)) {
      w.push_back(Token::even(pair_.group().sample(alg_, rng)));
    } else {
      w.push_back(Token::odd(static_cast<int>(rng.below(static_cast<std::uint64_t>(pair_.odd_dim()))), rng.odd(alg_)));
    }
  }
  return w;
}

NormalForm SuperGroup::random_element(Rng& rng) const {
  NormalForm nf;
  for (int i = 0; i < pair_.odd_dim(); ++i) nf.etas.push_back(rng.nilpotent(alg_, Rng::Parity::Odd, 1, 2));
  nf.g_plus = pair_.group().sample(alg_, rng);
  return nf;
}

// ------------------------------------------------------------ induced modules

InducedRepresentation::InducedRepresentation(const SuperGroup& g, EvenModule v0)
    : group_(&g), module_(g.pair().lie(), std::move(v0)) {}

SuperMatrix InducedRepresentation::action(const GroupWord& w) const {
  group_->validate(w);
  const auto& alg = group_->algebra();
  const auto& pair = group_->pair();
  SuperMatrix m = SuperMatrix::identity(alg, module_.even_dim(), module_.odd_dim());
  for (const auto& t : w) {
    if (t.is_even()) {
      std::vector<std::vector<Coeff>> ad;
      for (int s = 0; s < pair.odd_dim(); ++s) ad.push_back(pair.ad_coords_forward(t.g, s));
      m = m * module_.even_matrix(ad, module_.v0().group_action(t.g));
    } else {
      m = m * module_.odd_matrix(t.eta, t.index);
    }
  }
  return m;
}

SuperMatrix InducedRepresentation::action(const NormalForm& nf) const { return action(group_->expand(nf)); }

AxiomReport InducedRepresentation::check(int samples, std::uint64_t seed) const {
  AxiomReport rep = module_.check_module_axioms();
  const auto& pair = group_->pair();
  const auto& l = pair.lie();
  const auto& v0 = module_.v0();
  const auto dual = CoeffAlgebra::dual_extension(CoeffAlgebra::ground(pair.field()));
  const Coeff eps = dual.even_generator(1);
  for (int k = 0; k < l.even_dim(); ++k) {
    ++rep.checks;
    const SuperMatrix g = SuperMatrix::identity(dual, pair.p(), pair.q()) + pair.rho_basis(dual, l.x(k)).scaled(eps);
    const SuperMatrix expect =
        SuperMatrix::identity(dual, v0.p0, v0.q0) +
        SuperMatrix::from_scalars(dual, v0.p0, v0.q0, v0.algebra_action[static_cast<std::size_t>(k)]).scaled(eps);
    if (v0.group_action(g) != expect) {
      rep.failures.push_back({"V0", l.label(k), "group action of 1 + eps X differs from 1 + eps rho0(X)"});
    }
  }
  Rng rng(seed);
  const auto& alg = group_->algebra();
  for (int s = 0; s < samples; ++s) {
    const std::string tag = "sample " + std::to_string(s);
    const SuperMatrix g = pair.group().sample(alg, rng), h = pair.group().sample(alg, rng);
    rep.checks += 2;
    if (v0.group_action(g * h) != v0.group_action(g) * v0.group_action(h)) {
      rep.failures.push_back({"V0", tag, "G+ action is not multiplicative"});
    }
    const GroupWord w = group_->random_word(rng, 5);
    if (action(w) != action(group_->normal_form(w))) {
      rep.failures.push_back({"induced", tag, "word and its normal form act differently"});
    }
  }
  return rep;
}

// ------------------------------------------------------------------ morphisms

namespace {

std::vector<Scalar> constant_coords(const std::optional<std::vector<Coeff>>& c, const std::string& what) {
  if (!c) throw SpanViolation(what + " leaves the target span");
  std::vector<Scalar> out;
  for (const auto& x : *c) out.push_back(x.body());
  return out;
}

LieVec apply_map(const PairMorphism& m, const LieSuperalgebraData& src, const LieSuperalgebraData& dst,
                 const LieVec& v) {
  LieVec r = dst.zero();
  for (int k = 0; k < src.even_dim(); ++k) {
    if (v[k].is_zero()) continue;
    for (int j = 0; j < dst.even_dim(); ++j) r[dst.x(j)] += m.even_map(j, k) * v[k];
  }
  for (int i = 0; i < src.odd_dim(); ++i) {
    if (v[src.y(i)].is_zero()) continue;
    for (int j = 0; j < dst.odd_dim(); ++j) r[dst.y(j)] += m.odd_map(j, i) * v[src.y(i)];
  }
  return r;
}

}  // namespace

PairMorphism embedding_morphism(const HarishChandraPair& source, const HarishChandraPair& target,
                                const std::vector<int>& pos) {
  const int n1 = source.p() + source.q(), n2 = target.p() + target.q();
  if (static_cast<int>(pos.size()) != n1) throw StructureError("embedding needs one position per source row");
  for (int i = 0; i < n1; ++i) {
    if (pos[i] < 0 || pos[i] >= n2 || (i < source.p()) != (pos[i] < target.p())) {
      throw StructureError("embedding positions must preserve parity");
    }
  }
  const Field f = source.field();
  const int p2 = target.p(), q2 = target.q();
  PairMorphism m;
  m.omega_plus = [pos, p2, q2, n1](const SuperMatrix& g) {
    SuperMatrix r = SuperMatrix::identity(g.algebra(), p2, q2);
    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < n1; ++j) r(pos[i], pos[j]) = g(i, j);
    }
    return r;
  };
  const auto ground = CoeffAlgebra::ground(f);
  auto image = [&](int a) {
    const KMatrix src = source.lie().rho_basis(a);
    KMatrix dst(f, static_cast<std::size_t>(n2), static_cast<std::size_t>(n2));
    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < n1; ++j) dst(pos[i], pos[j]) = src(i, j);
    }
    return SuperMatrix::from_scalars(ground, p2, q2, dst);
  };
  const auto& sl = source.lie();
  m.even_map = KMatrix(f, static_cast<std::size_t>(target.even_dim()), static_cast<std::size_t>(sl.even_dim()));
  for (int k = 0; k < sl.even_dim(); ++k) {
    const auto c = constant_coords(target.even_coords(image(sl.x(k))), "omega(" + sl.label(sl.x(k)) + ")");
    for (int j = 0; j < target.even_dim(); ++j) m.even_map(j, k) = c[j];
  }
  m.odd_map = KMatrix(f, static_cast<std::size_t>(target.odd_dim()), static_cast<std::size_t>(sl.odd_dim()));
  for (int i = 0; i < sl.odd_dim(); ++i) {
    const auto c = constant_coords(target.odd_coords(image(sl.y(i))), "omega(" + sl.label(sl.y(i)) + ")");
    for (int j = 0; j < target.odd_dim(); ++j) m.odd_map(j, i) = c[j];
  }
  return m;
}

PairMorphism zero_morphism(const HarishChandraPair& source, const HarishChandraPair& target) {
  const int p2 = target.p(), q2 = target.q();
  PairMorphism m;
  m.omega_plus = [p2, q2](const SuperMatrix& g) { return SuperMatrix::identity(g.algebra(), p2, q2); };
  m.even_map = KMatrix(source.field(), static_cast<std::size_t>(target.even_dim()),
                       static_cast<std::size_t>(source.even_dim()));
  m.odd_map = KMatrix(source.field(), static_cast<std::size_t>(target.odd_dim()),
                      static_cast<std::size_t>(source.odd_dim()));
  return m;
}

AxiomReport check_morphism(const SuperGroup& source, const SuperGroup& target, const PairMorphism& m, int samples,
                           std::uint64_t seed) {
  AxiomReport rep;
  const auto& sp = source.pair();
  const auto& tp = target.pair();
  const auto& sl = sp.lie();
  const auto& tl = tp.lie();
  auto fail = [&](const std::string& what, const std::string& where, const std::string& detail) {
    rep.failures.push_back({what, where, detail});
  };
  auto omega = [&](const LieVec& v) { return apply_map(m, sl, tl, v); };

  for (int a = 0; a < sl.dim(); ++a) {
    for (int b = 0; b < sl.dim(); ++b) {
      ++rep.checks;
      if (omega(sl.bracket(a, b)) != tl.bracket(omega(sl.unit(a)), omega(sl.unit(b)))) {
        fail("bracket", "(" + sl.label(a) + "," + sl.label(b) + ")", "omega[u,v] != [omega u, omega v]");
      }
    }
  }
  for (int i = 0; i < sl.odd_dim(); ++i) {
    ++rep.checks;
    if (omega(sl.two_op(sl.unit(sl.y(i)))) != tl.two_op(omega(sl.unit(sl.y(i))))) {
      fail("2-op", sl.label(sl.y(i)), "omega(Y^<2>) != omega(Y)^<2>");
    }
  }
  const auto dual = CoeffAlgebra::dual_extension(CoeffAlgebra::ground(sp.field()));
  const Coeff eps = dual.even_generator(1);
  for (int k = 0; k < sl.even_dim(); ++k) {
    ++rep.checks;
    const SuperMatrix g = SuperMatrix::identity(dual, sp.p(), sp.q()) + sp.rho_basis(dual, sl.x(k)).scaled(eps);
    const SuperMatrix expect =
        SuperMatrix::identity(dual, tp.p(), tp.q()) + tp.rho(dual, omega(sl.unit(sl.x(k)))).scaled(eps);
    if (m.omega_plus(g) != expect) fail("dOmega", sl.label(k), "Omega_+(1 + eps X) != 1 + eps omega(X)");
  }
  Rng rng(seed);
  const auto& alg = source.algebra();
  for (int s = 0; s < samples; ++s) {
    const std::string tag = "sample " + std::to_string(s);
    const SuperMatrix g = sp.group().sample(alg, rng), h = sp.group().sample(alg, rng);
    const SuperMatrix og = m.omega_plus(g);
    rep.checks += 2;
    if (!tp.group().contains(og)) {
      fail("Omega+", tag, "image leaves " + tp.group().name);
      continue;
    }
    if (m.omega_plus(g * h) != og * m.omega_plus(h)) fail("Omega+", tag, "not multiplicative");
    // omega(Ad(g) Y_i) = Ad(Omega_+ g)(omega Y_i), coefficientwise over A.
    for (int i = 0; i < sl.odd_dim(); ++i) {
      ++rep.checks;
      const auto c = sp.ad_coords_forward(g, i);
      std::vector<Coeff> lhs(static_cast<std::size_t>(tl.odd_dim()), alg.zero());
      std::vector<Coeff> rhs = lhs;
      for (int j = 0; j < sl.odd_dim(); ++j) {
        for (int t = 0; t < tl.odd_dim(); ++t) lhs[t] += c[j] * m.odd_map(t, j);
      }
      for (int t0 = 0; t0 < tl.odd_dim(); ++t0) {
        if (m.odd_map(t0, i).is_zero()) continue;
        const auto d = tp.ad_coords_forward(og, t0);
        for (int t = 0; t < tl.odd_dim(); ++t) rhs[t] += d[t] * m.odd_map(t0, i);
      }
      if (lhs != rhs) fail("Ad", tag + ", " + sl.label(sl.y(i)), "omega does not intertwine Ad");
    }
  }
  return rep;
}

NormalForm psi_on_morphism(const SuperGroup& source, const SuperGroup& target, const PairMorphism& m,
                           const NormalForm& nf) {
  (void)source;
  GroupWord w;
  for (std::size_t i = 0; i < nf.etas.size(); ++i) {
    if (nf.etas[i].is_zero()) continue;
    for (int j = 0; j < target.pair().odd_dim(); ++j) {
      const Scalar& c = m.odd_map(static_cast<std::size_t>(j), i);
      if (!c.is_zero()) w.push_back(Token::odd(j, nf.etas[i] * c));
    }
  }
  w.push_back(Token::even(m.omega_plus(nf.g_plus)));
  return target.normal_form(w);
}

// ------------------------------------------------------------------ round trips

namespace {

// Entrywise coefficient of one monomial, as a k-matrix.
KMatrix monomial_part(const SuperMatrix& m, CoeffAlgebra::Mask mask) {
  KMatrix k(m.algebra().field(), static_cast<std::size_t>(m.size()), static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) k(i, j) = m(i, j).coefficient(mask);
  }
  return k;
}

}  // namespace

AxiomReport roundtrip_phi_psi(const HarishChandraPair& pair, int samples, std::uint64_t seed) {
  AxiomReport rep;
  const auto& l = pair.lie();
  const Field f = pair.field();
  const int p = pair.p(), q = pair.q();
  auto fail = [&](const std::string& what, const std::string& where, const std::string& detail) {
    rep.failures.push_back({what, where, detail});
  };
  const auto alg = CoeffAlgebra::grassmann(f, 4);
  const SuperGroup g(pair, alg);
  const SuperMatrix id = SuperMatrix::identity(alg, p, q);

  // (G_P)_0 = G_+ on sampled A_0-points.
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    ++rep.checks;
    const SuperMatrix h = pair.group().sample(alg, rng);
    const NormalForm nf = g.normal_form({Token::even(h)});
    if (nf != NormalForm{g.identity().etas, h}) fail("even-points", "sample " + std::to_string(s), nf.to_string());
  }
  // Tangent probes over k[eps] and Lambda_1.
  {
    const auto dual = CoeffAlgebra::dual_extension(CoeffAlgebra::ground(f));
    const SuperGroup gd(pair, dual);
    const Coeff eps = dual.even_generator(1);
    for (int k = 0; k < l.even_dim(); ++k) {
      ++rep.checks;
      const SuperMatrix x = SuperMatrix::identity(dual, p, q) + pair.rho_basis(dual, l.x(k)).scaled(eps);
      if (gd.normal_form({Token::even(x)}).g_plus != x) fail("tangent", l.label(k), "1 + eps X not recovered");
    }
    const auto lam1 = CoeffAlgebra::grassmann(f, 1);
    const SuperGroup g1(pair, lam1);
    for (int i = 0; i < l.odd_dim(); ++i) {
      ++rep.checks;
      const NormalForm nf = g1.normal_form({Token::odd(i, lam1.odd_generator(1))});
      NormalForm expect = g1.identity();
      expect.etas[i] = lam1.odd_generator(1);
      if (nf != expect) fail("tangent", l.label(l.y(i)), "1 + xi Y not recovered");
    }
  }

  const Coeff x1 = alg.odd_generator(1), x2 = alg.odd_generator(2), x3 = alg.odd_generator(3),
              x4 = alg.odd_generator(4);
  auto even_coords = [&](const KMatrix& k) {
    return constant_coords(pair.even_coords(SuperMatrix::from_scalars(CoeffAlgebra::ground(f), p, q, k)), "bracket");
  };
  auto compare_even = [&](const std::string& where, const KMatrix& k, const LieVec& expect) {
    ++rep.checks;
    LieVec got = l.zero();
    try {
      const auto c = even_coords(k);
      for (int j = 0; j < l.even_dim(); ++j) got[l.x(j)] = c[j];
    } catch (const SpanViolation&) {
      fail("constants", where, "recovered matrix outside rho(g_0)");
      return;
    }
    if (got != expect) fail("constants", where, "recovered constants differ from the stored ones");
  };
  auto odd_nf = [&](int i, const Coeff& eta) { return g.normal_form({Token::odd(i, eta)}); };
  auto even_nf = [&](const Coeff& c, int k) {
    return g.normal_form({Token::even(id + pair.rho_basis(alg, l.x(k)).scaled(c))});
  };
  auto etas_zero = [](const NormalForm& nf) {
    return std::all_of(nf.etas.begin(), nf.etas.end(), [](const Coeff& c) { return c.is_zero(); });
  };

  // ((1 + x1 Y_i), (1 + x2 Y_j)) = (1 + x2 x1 [Y_i, Y_j]); x2 x1 = -x1 x2.
  for (int i = 0; i < l.odd_dim(); ++i) {
    for (int j = 0; j < l.odd_dim(); ++j) {
      const std::string where = "(" + l.label(l.y(i)) + "," + l.label(l.y(j)) + ")";
      const NormalForm c = g.commutator(odd_nf(i, x1), odd_nf(j, x2));
      if (!etas_zero(c)) fail("constants", where, "odd commutator has odd part");
      compare_even(where, monomial_part(c.g_plus - id, 0b11) * Scalar(f, -1), l.bracket(l.y(i), l.y(j)));
    }
    // (1 + x1 Y)(1 + x2 Y) = (1 + (x1 + x2) Y)(1 + x2 x1 Y^<2>).
    const NormalForm sq = g.mul(odd_nf(i, x1), odd_nf(i, x2));
    ++rep.checks;
    if (sq.etas[i] != x1 + x2) fail("constants", l.label(l.y(i)) + "^<2>", "eta is not x1 + x2");
    LieVec q2 = l.zero();
    for (int k = 0; k < l.even_dim(); ++k) q2[l.x(k)] = l.two_op(i)[k];
    compare_even(l.label(l.y(i)) + "^<2>", monomial_part(sq.g_plus - id, 0b11) * Scalar(f, -1), q2);
  }
  // (1 + x1x2 X) (1 + x3 Y_i) (1 + x1x2 X)^-1 = prod_j (1 + x3 Ad(.)(Y_i)_j Y_j).
  for (int k = 0; k < l.even_dim(); ++k) {
    const NormalForm c = even_nf(x1 * x2, k);
    for (int i = 0; i < l.odd_dim(); ++i) {
      ++rep.checks;
      const std::string where = "(" + l.label(k) + "," + l.label(l.y(i)) + ")";
      const NormalForm conj = g.mul(g.mul(c, odd_nf(i, x3)), g.inv(c));
      if (!conj.g_plus.is_identity()) fail("constants", where, "conjugate has an even part");
      LieVec got = l.zero();
      for (int j = 0; j < l.odd_dim(); ++j) {
        if (conj.etas[j].coefficient(0b100) != (i == j ? Scalar::one(f) : Scalar::zero(f))) {
          fail("constants", where, "leading term of the conjugate is wrong");
        }
        got[l.y(j)] = conj.etas[j].coefficient(0b111);
      }
      if (got != l.bracket(l.x(k), l.y(i))) fail("constants", where, "recovered [X,Y] differs");
    }
    // ((1 + x1x2 X_k), (1 + x3x4 X_m)) = 1 + x1x2x3x4 [X_k, X_m].
    for (int m = 0; m < l.even_dim(); ++m) {
      const std::string where = "(" + l.label(k) + "," + l.label(m) + ")";
      const NormalForm cc = g.commutator(c, even_nf(x3 * x4, m));
      if (!etas_zero(cc)) fail("constants", where, "even commutator has odd part");
      compare_even(where, monomial_part(cc.g_plus - id, 0b1111), l.bracket(l.x(k), l.x(m)));
    }
  }
  return rep;
}

AxiomReport roundtrip_psi_phi(Field f, int p, int q, int rank, int samples, std::uint64_t seed) {
  AxiomReport rep;
  const auto group = gl_supergroup(f, p, q);
  const auto phi = phi_of_group(group, 8, seed);
  rep.checks += phi.report.checks.checks;
  for (const auto& x : phi.report.checks.failures) rep.failures.push_back(x);
  const auto alg = CoeffAlgebra::grassmann(f, rank);
  const SuperGroup g(phi.pair, alg);
  Rng rng(seed);
  std::vector<std::pair<SuperMatrix, NormalForm>> seen;
  for (int s = 0; s < samples; ++s) {
    const std::string tag = "sample " + std::to_string(s);
    const SuperMatrix m = group.full.sample(alg, rng);
    rep.checks += 4;
    const auto nf = g.strip_matrix(m);
    if (!nf) {
      rep.failures.push_back({"strip", tag, "no factorization"});
      continue;
    }
    const GroupWord w = g.expand(*nf);
    if (g.rho(w) != m) rep.failures.push_back({"reassembly", tag, "rho(normal form) != sample"});
    if (g.normal_form(w) != *nf) rep.failures.push_back({"normal-form", tag, "normal form of stripped word moved"});
    SuperMatrix u = SuperMatrix::identity(alg, p, q);
    for (int i = 0; i < phi.pair.odd_dim(); ++i) u = u * phi.pair.odd_factor(nf->etas[i], i);
    const GlFactors fu = gl_split_left(u), fm = gl_split_left(m);
    if (fu.odd != fm.odd || fu.even * nf->g_plus != fm.even) {
      rep.failures.push_back({"gl-split", tag, "factorization does not match gl_split_left"});
    }
    for (const auto& [m2, nf2] : seen) {
      if ((m2 == m) != (nf2 == *nf)) rep.failures.push_back({"bijection", tag, "matrix and normal form disagree"});
    }
    seen.emplace_back(m, *nf);
  }
  return rep;
}

}  // namespace shc
