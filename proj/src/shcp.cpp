#include "shc/shcp.hpp"

#include <sstream>

namespace shc {

namespace {

std::vector<std::vector<Scalar>> flattened(const std::vector<KMatrix>& mats) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& m : mats) {
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Coeff> flatten_entries(const SuperMatrix& m) {
  std::vector<Coeff> v;
  v.reserve(static_cast<std::size_t>(m.size() * m.size()));
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) v.push_back(m(i, j));
  }
  return v;
}

}  // namespace

HarishChandraPair::HarishChandraPair(GroupDescriptor group, LieSuperalgebraData lie)
    : group_(std::move(group)), lie_(std::move(lie)) {
  if (!lie_.rho()) throw StructureError("pair needs representation matrices for g");
  if (lie_.rho()->p != group_.p || lie_.rho()->q != group_.q) {
    throw StructureError("representation shape does not match the group descriptor");
  }
  const auto dim = static_cast<std::size_t>((p() + q()) * (p() + q()));
  odd_solver_ = SpanSolver(field(), dim, flattened(lie_.rho()->odd));
  even_solver_ = SpanSolver(field(), dim, flattened(lie_.rho()->even));
}

SuperMatrix HarishChandraPair::rho(const CoeffAlgebra& alg, const LieVec& v) const {
  return SuperMatrix::from_scalars(alg, p(), q(), lie_.rho_of(v));
}

SuperMatrix HarishChandraPair::rho_basis(const CoeffAlgebra& alg, int a) const {
  return SuperMatrix::from_scalars(alg, p(), q(), lie_.rho_basis(a));
}

SuperMatrix HarishChandraPair::odd_factor(const Coeff& eta, int i) const {
  const CoeffAlgebra& alg = eta.algebra();
  return SuperMatrix::identity(alg, p(), q()) + rho_basis(alg, lie_.y(i)).scaled(eta);
}

std::optional<std::vector<Coeff>> HarishChandraPair::odd_coords(const SuperMatrix& m) const {
  if (odd_dim() == 0) {
    if (m.is_zero()) return std::vector<Coeff>{};
    return std::nullopt;
  }
  return odd_solver_.solve(flatten_entries(m));
}

std::optional<std::vector<Coeff>> HarishChandraPair::even_coords(const SuperMatrix& m) const {
  if (even_dim() == 0) {
    if (m.is_zero()) return std::vector<Coeff>{};
    return std::nullopt;
  }
  return even_solver_.solve(flatten_entries(m));
}

std::vector<Coeff> HarishChandraPair::ad_coords(const SuperMatrix& g, int i) const {
  if (!group_.contains(g)) throw MembershipViolation("ad_coords: element is not in " + group_.name);
  const SuperMatrix conj = inverse(g) * rho_basis(g.algebra(), lie_.y(i)) * g;
  auto c = odd_coords(conj);
  if (!c) throw SpanViolation("Ad(g^-1)(" + lie_.label(lie_.y(i)) + ") leaves the span of the odd basis");
  return std::move(*c);
}

std::vector<Coeff> HarishChandraPair::ad_coords_forward(const SuperMatrix& g, int i) const {
  if (!group_.contains(g)) throw MembershipViolation("ad_coords: element is not in " + group_.name);
  const SuperMatrix conj = g * rho_basis(g.algebra(), lie_.y(i)) * inverse(g);
  auto c = odd_coords(conj);
  if (!c) throw SpanViolation("Ad(g)(" + lie_.label(lie_.y(i)) + ") leaves the span of the odd basis");
  return std::move(*c);
}

std::string PairReport::to_string() const {
  std::ostringstream os;
  os << checks.to_string();
  for (const auto& n : notes) os << "\n  note: " << n;
  return os.str();
}

PairReport validate_pair(const HarishChandraPair& pair, int samples, std::uint64_t seed) {
  PairReport rep;
  auto& checks = rep.checks;
  auto fail = [&](const std::string& family, const std::string& where, const std::string& detail) {
    checks.failures.push_back({family, where, detail});
  };
  const auto& l = pair.lie();
  const Field f = pair.field();

  const AxiomReport ax = check_axioms(l);
  checks.checks += ax.checks;
  for (const auto& x : ax.failures) checks.failures.push_back(x);

  // Lie(G_+) versus g_0.
  const auto points = lie_points(pair.group(), l.rho()->even);
  bool contained = true;
  for (int k = 0; k < l.even_dim(); ++k) {
    ++checks.checks;
    if (!points[k]) {
      contained = false;
      fail("tangent", l.label(k), "1 + eps rho(" + l.label(k) + ") is not in " + pair.group().name);
    }
  }
  if (pair.group().tangent_dim) {
    ++checks.checks;
    const int t = *pair.group().tangent_dim;
    if (contained && t == l.even_dim()) {
      rep.notes.push_back("Lie(G+) = g0 certified (dimension " + std::to_string(t) + ")");
    } else if (contained) {
      fail("tangent", "dim", "dim Lie(G+) = " + std::to_string(t) + " but dim g0 = " + std::to_string(l.even_dim()));
    }
  } else if (contained) {
    rep.notes.push_back("Lie(G+) contains g0; equality assumed (no tangent dimension for " + pair.group().name + ")");
  }

  // d(Ad) = bracket: (1 + eps X) Y (1 - eps X) = Y + eps [X, Y].
  const auto dual = CoeffAlgebra::dual_extension(CoeffAlgebra::ground(f));
  const Coeff eps = dual.even_generator(1);
  for (int k = 0; k < l.even_dim(); ++k) {
    const SuperMatrix x = pair.rho_basis(dual, l.x(k));
    const SuperMatrix g = SuperMatrix::identity(dual, pair.p(), pair.q()) + x.scaled(eps);
    for (int i = 0; i < l.odd_dim(); ++i) {
      ++checks.checks;
      const SuperMatrix y = pair.rho_basis(dual, l.y(i));
      const SuperMatrix lhs = g * y * inverse(g);
      const SuperMatrix rhs = y + pair.rho(dual, l.bracket(l.x(k), l.y(i))).scaled(eps);
      if (lhs != rhs) fail("dAd", "(" + l.label(k) + "," + l.label(l.y(i)) + ")", "Ad(1+eps X)(Y) != Y + eps[X,Y]");
    }
  }

  const auto alg = CoeffAlgebra::grassmann(f, 4);
  Rng rng(seed);
  const SuperMatrix id = SuperMatrix::identity(alg, pair.p(), pair.q());
  ++checks.checks;
  if (!pair.group().contains(id)) fail("closure", "identity", "identity is not in " + pair.group().name);
  bool ad_stable = true, two_op_ok = true;
  for (int s = 0; s < samples; ++s) {
    const SuperMatrix g = pair.group().sample(alg, rng);
    const SuperMatrix h = pair.group().sample(alg, rng);
    const std::string tag = "sample " + std::to_string(s);
    checks.checks += 3;
    if (!pair.group().contains(g)) fail("closure", tag, "sampler produced a non-member");
    if (!pair.group().contains(g * h)) fail("closure", tag, "product left " + pair.group().name);
    const SuperMatrix gi = inverse(g);
    if (!pair.group().contains(gi)) fail("closure", tag, "inverse left " + pair.group().name);

    std::vector<std::vector<Coeff>> coords;
    bool sample_stable = true;
    for (int i = 0; i < l.odd_dim(); ++i) {
      ++checks.checks;
      auto c = pair.odd_coords(g * pair.rho_basis(alg, l.y(i)) * gi);
      if (!c) {
        ad_stable = sample_stable = false;
        fail("ad-stability", tag + ", " + l.label(l.y(i)), "g Y g^-1 is not in the A-span of the odd basis");
        continue;
      }
      for (const auto& x : *c) {
        if (!x.is_even()) {
          ad_stable = sample_stable = false;
          fail("ad-stability", tag + ", " + l.label(l.y(i)), "coordinate outside A_0");
          break;
        }
      }
      coords.push_back(std::move(*c));
    }
    if (!sample_stable) continue;
    // Ad(g)(Y_i^<2>) = (Ad(g) Y_i)^<2>, extended quadratically over A_0.
    for (int i = 0; i < l.odd_dim(); ++i) {
      ++checks.checks;
      const LieVec qi = l.two_op(l.unit(l.y(i)));
      const SuperMatrix lhs = g * pair.rho(alg, qi) * gi;
      SuperMatrix rhs(alg, pair.p(), pair.q());
      const auto& c = coords[i];
      for (int j = 0; j < l.odd_dim(); ++j) {
        if (c[j].is_zero()) continue;
        rhs = rhs + pair.rho(alg, l.two_op(l.unit(l.y(j)))).scaled(c[j] * c[j]);
        for (int m = j + 1; m < l.odd_dim(); ++m) {
          if (c[m].is_zero()) continue;
          rhs = rhs + pair.rho(alg, l.bracket(l.y(j), l.y(m))).scaled(c[j] * c[m]);
        }
      }
      if (lhs != rhs) {
        two_op_ok = false;
        fail("ad-2op", tag + ", " + l.label(l.y(i)), "Ad(g)(Y^<2>) != (Ad(g)Y)^<2>");
      }
    }
  }
  if (ad_stable && two_op_ok && l.odd_dim() > 0) {
    rep.notes.push_back("Ad compatible with the 2-operation on " + std::to_string(samples) + " samples");
  }
  return rep;
}

LinearSupergroup gl_supergroup(Field f, int p, int q) {
  LinearSupergroup g;
  g.name = "GL(" + std::to_string(p) + "|" + std::to_string(q) + ")";
  g.full = gl_super_group(p, q);
  g.even_part = gl_even_group(p, q);
  const int n = p + q;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      KMatrix e(f, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      e(i, j) = Scalar::one(f);
      ((i < p) == (j < p) ? g.even_candidates : g.odd_candidates).push_back(e);
    }
  }
  return g;
}

PhiResult phi_of_group(const LinearSupergroup& g, int samples, std::uint64_t seed) {
  const Field f = !g.even_candidates.empty() ? g.even_candidates[0].field()
                  : !g.odd_candidates.empty() ? g.odd_candidates[0].field()
                                              : Field::rationals();
  std::vector<KMatrix> even, odd;
  const auto ev = lie_points(g.full, g.even_candidates);
  for (std::size_t k = 0; k < ev.size(); ++k) {
    if (ev[k]) even.push_back(g.even_candidates[k]);
  }
  const auto od = lie_points(g.full, g.odd_candidates);
  for (std::size_t k = 0; k < od.size(); ++k) {
    if (od[k]) odd.push_back(g.odd_candidates[k]);
  }
  LieSuperalgebraData lie = from_matrices(f, g.full.p, g.full.q, even, odd);
  PhiResult r{HarishChandraPair(g.even_part, std::move(lie)), PairReport{}};
  r.report = validate_pair(r.pair, samples, seed);
  return r;
}

}  // namespace shc
