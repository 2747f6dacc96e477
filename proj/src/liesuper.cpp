#include "shc/liesuper.hpp"

#include <sstream>

namespace shc {

LieSuperalgebraData::LieSuperalgebraData(Field f, int d_even, int d_odd)
    : field_(f), d_even_(d_even), d_odd_(d_odd) {
  if (d_even < 0 || d_odd < 0) throw StructureError("negative Lie superalgebra dimension");
  if (d_odd > 16) throw StructureError("odd dimension above 16 is not supported");
  bracket_.assign(static_cast<std::size_t>(dim() * dim()), zero());
  two_op_.assign(static_cast<std::size_t>(d_odd), LieVec(static_cast<std::size_t>(d_even), Scalar::zero(f)));
}

std::string LieSuperalgebraData::label(int a) const {
  return is_odd(a) ? "Y" + std::to_string(a - d_even_ + 1) : "X" + std::to_string(a + 1);
}

void LieSuperalgebraData::set_bracket(int a, int b, LieVec value) {
  if (value.size() != static_cast<std::size_t>(dim())) throw StructureError("bracket value has wrong length");
  bracket_[static_cast<std::size_t>(a * dim() + b)] = std::move(value);
}

void LieSuperalgebraData::set_bracket_antisymmetric(int a, int b, const LieVec& value) {
  set_bracket(a, b, value);
  if (a == b) return;
  LieVec other = value;
  if (!(is_odd(a) && is_odd(b))) {
    for (auto& c : other) c = -c;
  }
  set_bracket(b, a, std::move(other));
}

void LieSuperalgebraData::set_two_op(int i, LieVec value) {
  if (value.size() != static_cast<std::size_t>(d_even_)) throw StructureError("2-operation value has wrong length");
  two_op_[static_cast<std::size_t>(i)] = std::move(value);
}

void LieSuperalgebraData::set_rho(Representation r) {
  if (static_cast<int>(r.even.size()) != d_even_ || static_cast<int>(r.odd.size()) != d_odd_) {
    throw StructureError("representation has the wrong number of matrices");
  }
  const auto n = static_cast<std::size_t>(r.p + r.q);
  for (const auto* mats : {&r.even, &r.odd}) {
    for (const auto& m : *mats) {
      if (m.rows() != n || m.cols() != n || m.field() != field_) {
        throw StructureError("representation matrix has the wrong size or field");
      }
    }
  }
  rho_ = std::move(r);
}

LieVec LieSuperalgebraData::unit(int a) const {
  LieVec v = zero();
  v[static_cast<std::size_t>(a)] = Scalar::one(field_);
  return v;
}

LieVec LieSuperalgebraData::bracket(const LieVec& u, const LieVec& v) const {
  LieVec r = zero();
  for (int a = 0; a < dim(); ++a) {
    if (u[a].is_zero()) continue;
    for (int b = 0; b < dim(); ++b) {
      if (v[b].is_zero()) continue;
      const Scalar c = u[a] * v[b];
      const LieVec& br = bracket(a, b);
      for (int k = 0; k < dim(); ++k) {
        if (!br[k].is_zero()) r[k] += c * br[k];
      }
    }
  }
  return r;
}

LieVec LieSuperalgebraData::two_op(const LieVec& z) const {
  LieVec r = zero();
  for (int i = 0; i < d_odd_; ++i) {
    const Scalar& ci = z[y(i)];
    if (ci.is_zero()) continue;
    const Scalar sq = ci * ci;
    for (int k = 0; k < d_even_; ++k) r[k] += sq * two_op_[i][k];
    for (int j = i + 1; j < d_odd_; ++j) {
      const Scalar& cj = z[y(j)];
      if (cj.is_zero()) continue;
      const LieVec& br = bracket(y(i), y(j));
      for (int k = 0; k < dim(); ++k) r[k] += ci * cj * br[k];
    }
  }
  return r;
}

KMatrix LieSuperalgebraData::rho_basis(int a) const {
  if (!rho_) throw StructureError("Lie superalgebra has no representation matrices");
  return is_odd(a) ? rho_->odd[a - d_even_] : rho_->even[a];
}

KMatrix LieSuperalgebraData::rho_of(const LieVec& v) const {
  if (!rho_) throw StructureError("Lie superalgebra has no representation matrices");
  const auto n = static_cast<std::size_t>(rho_->p + rho_->q);
  KMatrix m(field_, n, n);
  for (int a = 0; a < dim(); ++a) {
    if (!v[a].is_zero()) m = m + rho_basis(a) * v[a];
  }
  return m;
}

namespace {

std::string combo(const LieSuperalgebraData& l, const LieVec& v) {
  std::string s;
  for (int a = 0; a < l.dim(); ++a) {
    if (v[a].is_zero()) continue;
    if (!s.empty()) s += "+";
    if (!v[a].is_one()) s += v[a].to_string() + "*";
    s += l.label(a);
  }
  return s.empty() ? "0" : s;
}

LieVec add(LieVec a, const LieVec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

LieVec sub(LieVec a, const LieVec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

LieVec scale(LieVec a, const Scalar& s) {
  for (auto& x : a) x *= s;
  return a;
}

bool is_zero(const LieVec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

// Odd vectors with support of size <= 3 and coefficients from a small set
// of distinct nonzero field elements.
std::vector<LieVec> odd_probes(const LieSuperalgebraData& l) {
  const Field f = l.field();
  std::vector<Scalar> coeffs;
  for (long c : {1L, -1L, 2L}) {
    Scalar s(f, c);
    if (s.is_zero()) continue;
    bool dup = false;
    for (const auto& t : coeffs) dup = dup || t == s;
    if (!dup) coeffs.push_back(s);
  }
  std::vector<LieVec> out;
  const int n = l.odd_dim();
  for (int mask = 1; mask < (1 << n); ++mask) {
    const int k = __builtin_popcount(static_cast<unsigned>(mask));
    if (k > 3) continue;
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) {
      if (mask & (1 << i)) idx.push_back(i);
    }
    std::vector<std::size_t> choice(idx.size(), 0);
    while (true) {
      LieVec v = l.zero();
      for (std::size_t t = 0; t < idx.size(); ++t) v[l.y(idx[t])] = coeffs[choice[t]];
      out.push_back(std::move(v));
      std::size_t t = 0;
      while (t < choice.size() && ++choice[t] == coeffs.size()) choice[t++] = 0;
      if (t == choice.size()) break;
    }
  }
  return out;
}

}  // namespace

std::string AxiomReport::to_string() const {
  std::ostringstream os;
  if (failures.empty()) {
    os << "PASS (" << checks << " checks)";
    return os.str();
  }
  os << "FAIL (" << failures.size() << " of " << checks << " checks)";
  for (const auto& f : failures) os << "\n  (" << f.axiom << ") " << f.where << ": " << f.detail;
  return os.str();
}

AxiomReport check_axioms(const LieSuperalgebraData& l) {
  AxiomReport rep;
  auto fail = [&](std::string axiom, std::string where, std::string detail) {
    rep.failures.push_back({std::move(axiom), std::move(where), std::move(detail)});
  };
  auto par = [&](int a) { return l.is_odd(a) ? 1 : 0; };
  const int n = l.dim();

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      ++rep.checks;
      const int target = (par(a) + par(b)) % 2;
      const LieVec& br = l.bracket(a, b);
      for (int c = 0; c < n; ++c) {
        if (!br[c].is_zero() && par(c) != target) {
          fail("parity", "(" + l.label(a) + "," + l.label(b) + ")", "component on " + l.label(c));
          break;
        }
      }
    }
  }

  // (a) [w,w] = 0 on even basis vectors and their pairwise sums.
  for (int a = 0; a < l.even_dim(); ++a) {
    for (int b = a; b < l.even_dim(); ++b) {
      ++rep.checks;
      const LieVec w = a == b ? l.unit(a) : add(l.unit(a), l.unit(b));
      const LieVec r = l.bracket(w, w);
      if (!is_zero(r)) fail("a", "[w,w] w=" + combo(l, w), "= " + combo(l, r));
    }
  }
  const auto probes = odd_probes(l);
  for (const auto& z : probes) {
    ++rep.checks;
    const LieVec r = l.bracket(z, l.bracket(z, z));
    if (!is_zero(r)) fail("a", "[z,[z,z]] z=" + combo(l, z), "= " + combo(l, r));
  }

  // (b) graded antisymmetry.
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      ++rep.checks;
      LieVec s = l.bracket(a, b);
      const LieVec& t = l.bracket(b, a);
      s = (par(a) && par(b)) ? sub(s, t) : add(s, t);
      if (!is_zero(s)) fail("b", "(" + l.label(a) + "," + l.label(b) + ")", "residual " + combo(l, s));
    }
  }

  // (c) graded Jacobi.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        ++rep.checks;
        const LieVec ux = l.unit(x), uy = l.unit(y), uz = l.unit(z);
        LieVec s = l.zero();
        const Scalar one = Scalar::one(l.field());
        auto sgn = [&](int p) { return p % 2 ? -one : one; };
        s = add(s, scale(l.bracket(ux, l.bracket(uy, uz)), sgn(par(x) * par(z))));
        s = add(s, scale(l.bracket(uy, l.bracket(uz, ux)), sgn(par(y) * par(x))));
        s = add(s, scale(l.bracket(uz, l.bracket(ux, uy)), sgn(par(z) * par(y))));
        if (!is_zero(s)) {
          fail("c", "(" + l.label(x) + "," + l.label(y) + "," + l.label(z) + ")", "residual " + combo(l, s));
        }
      }
    }
  }

  // (e) (z1+z2)^<2> = z1^<2> + [z1,z2] + z2^<2> on all ordered basis pairs.
  for (int i = 0; i < l.odd_dim(); ++i) {
    for (int j = 0; j < l.odd_dim(); ++j) {
      ++rep.checks;
      const LieVec z1 = l.unit(l.y(i)), z2 = l.unit(l.y(j));
      const LieVec lhs = l.two_op(add(z1, z2));
      const LieVec rhs = add(add(l.two_op(z1), l.bracket(z1, z2)), l.two_op(z2));
      if (lhs != rhs) {
        fail("e", "(" + l.label(l.y(i)) + "," + l.label(l.y(j)) + ")",
             "(z1+z2)^<2> = " + combo(l, lhs) + " but z1^<2>+[z1,z2]+z2^<2> = " + combo(l, rhs));
      }
    }
  }

  // (f) [z^<2>, x] = [z,[z,x]] for basis z and pairwise sums.
  std::vector<LieVec> zs;
  for (int i = 0; i < l.odd_dim(); ++i) {
    zs.push_back(l.unit(l.y(i)));
    for (int j = i + 1; j < l.odd_dim(); ++j) zs.push_back(add(l.unit(l.y(i)), l.unit(l.y(j))));
  }
  for (const auto& z : zs) {
    const LieVec sq = l.two_op(z);
    for (int x = 0; x < n; ++x) {
      ++rep.checks;
      const LieVec ux = l.unit(x);
      const LieVec lhs = l.bracket(sq, ux);
      const LieVec rhs = l.bracket(z, l.bracket(z, ux));
      if (lhs != rhs) {
        fail("f", "z=" + combo(l, z) + ", x=" + l.label(x),
             "[z^<2>,x] = " + combo(l, lhs) + " but [z,[z,x]] = " + combo(l, rhs));
      }
    }
  }

  if (l.rho()) {
    const auto& r = *l.rho();
    auto block_ok = [&](const KMatrix& m, int parity) {
      for (int i = 0; i < r.p + r.q; ++i) {
        for (int j = 0; j < r.p + r.q; ++j) {
          const int pij = ((i >= r.p) + (j >= r.p)) % 2;
          if (pij != parity && !m(i, j).is_zero()) return false;
        }
      }
      return true;
    };
    for (int a = 0; a < n; ++a) {
      ++rep.checks;
      if (!block_ok(l.rho_basis(a), par(a))) fail("rho", l.label(a), "matrix is not homogeneous of the right parity");
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        ++rep.checks;
        const KMatrix ma = l.rho_basis(a), mb = l.rho_basis(b);
        const KMatrix comm = (par(a) && par(b)) ? ma * mb + mb * ma : ma * mb - mb * ma;
        if (comm != l.rho_of(l.bracket(a, b))) {
          fail("rho", "(" + l.label(a) + "," + l.label(b) + ")", "rho([u,v]) != [rho(u),rho(v)]");
        }
      }
    }
    for (int i = 0; i < l.odd_dim(); ++i) {
      ++rep.checks;
      const KMatrix m = l.rho_basis(l.y(i));
      if (m * m != l.rho_of(l.two_op(l.unit(l.y(i))))) {
        fail("rho", l.label(l.y(i)), "rho(Y^<2>) != rho(Y)^2");
      }
    }
  }
  return rep;
}

LieSuperalgebraData from_matrices(Field f, int p, int q, const std::vector<KMatrix>& even_mats,
                                  const std::vector<KMatrix>& odd_mats) {
  const int n = p + q;
  const auto flat = [n](const KMatrix& m) {
    std::vector<Scalar> v;
    v.reserve(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) v.push_back(m(i, j));
    }
    return v;
  };
  auto homogeneous = [&](const KMatrix& m, int parity) {
    if (m.rows() != static_cast<std::size_t>(n) || m.cols() != static_cast<std::size_t>(n) || m.field() != f) {
      throw StructureError("matrix has the wrong size or field");
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (((i >= p) + (j >= p)) % 2 != parity && !m(i, j).is_zero()) return false;
      }
    }
    return true;
  };
  for (const auto& m : even_mats) {
    if (!homogeneous(m, 0)) throw StructureError("even basis matrix has entries in the odd blocks");
  }
  for (const auto& m : odd_mats) {
    if (!homogeneous(m, 1)) throw StructureError("odd basis matrix has entries in the even blocks");
  }

  LieSuperalgebraData l(f, static_cast<int>(even_mats.size()), static_cast<int>(odd_mats.size()));
  std::vector<KMatrix> basis = even_mats;
  basis.insert(basis.end(), odd_mats.begin(), odd_mats.end());
  std::vector<std::vector<Scalar>> cols;
  for (const auto& m : basis) cols.push_back(flat(m));
  const SpanSolver solver(f, static_cast<std::size_t>(n * n), cols);

  for (int i = 0; i < l.odd_dim(); ++i) {
    const KMatrix& m = odd_mats[i];
    const auto c = solver.solve(flat(m * m));
    if (!c) throw ClosureViolation(l.label(l.y(i)) + "^<2> leaves the span");
    l.set_two_op(i, LieVec(c->begin(), c->begin() + l.even_dim()));
  }
  for (int a = 0; a < l.dim(); ++a) {
    for (int b = 0; b < l.dim(); ++b) {
      const KMatrix& ma = basis[a];
      const KMatrix& mb = basis[b];
      const KMatrix comm = (l.is_odd(a) && l.is_odd(b)) ? ma * mb + mb * ma : ma * mb - mb * ma;
      auto c = solver.solve(flat(comm));
      if (!c) throw ClosureViolation("[" + l.label(a) + "," + l.label(b) + "] leaves the span");
      l.set_bracket(a, b, std::move(*c));
    }
  }
  l.set_rho(Representation{p, q, even_mats, odd_mats});
  return l;
}

}  // namespace shc
