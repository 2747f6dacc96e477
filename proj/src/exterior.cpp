#include "shc/liesuper.hpp"

namespace shc {

EvenModule EvenModule::trivial(Field f, int d_even) {
  EvenModule m;
  m.p0 = 1;
  m.q0 = 0;
  m.algebra_action.assign(static_cast<std::size_t>(d_even), KMatrix(f, 1, 1));
  m.group_action = [](const SuperMatrix& g) { return SuperMatrix::identity(g.algebra(), 1, 0); };
  return m;
}

EvenModule EvenModule::defining(const LieSuperalgebraData& l) {
  if (!l.rho()) throw StructureError("defining module needs representation matrices");
  EvenModule m;
  m.p0 = l.rho()->p;
  m.q0 = l.rho()->q;
  m.algebra_action = l.rho()->even;
  m.group_action = [](const SuperMatrix& g) { return g; };
  return m;
}

InducedModule::InducedModule(const LieSuperalgebraData& l, EvenModule v0) : lie_(l), v0_(std::move(v0)) {
  if (static_cast<int>(v0_.algebra_action.size()) != l.even_dim()) {
    throw StructureError("V0 needs one matrix per even basis element");
  }
  const int m = v0_.dim();
  const Subset subsets = Subset{1} << l.odd_dim();
  index_.assign(static_cast<std::size_t>(subsets) * m, -1);
  for (int pass = 0; pass < 2; ++pass) {
    for (Subset s = 0; s < subsets; ++s) {
      for (int t = 0; t < m; ++t) {
        const int parity = (__builtin_popcount(s) + (t >= v0_.p0 ? 1 : 0)) % 2;
        if (parity != pass) continue;
        index_[static_cast<std::size_t>(s) * m + t] = static_cast<int>(subset_of_.size());
        subset_of_.push_back(s);
        v0_of_.push_back(t);
      }
    }
    if (pass == 0) even_dim_ = static_cast<int>(subset_of_.size());
  }
  memo_.assign(static_cast<std::size_t>(l.dim()) * dim(), std::nullopt);
  for (int a = 0; a < l.dim(); ++a) {
    KMatrix g(l.field(), static_cast<std::size_t>(dim()), static_cast<std::size_t>(dim()));
    for (int pos = 0; pos < dim(); ++pos) {
      const auto col = act(a, pos);
      for (int r = 0; r < dim(); ++r) g(r, pos) = col[r];
    }
    gen_.push_back(std::move(g));
  }
  memo_.clear();
  memo_.shrink_to_fit();
}

std::vector<Scalar> InducedModule::act_vec(int a, const std::vector<Scalar>& v) {
  std::vector<Scalar> r(v.size(), Scalar::zero(lie_.field()));
  for (int b = 0; b < dim(); ++b) {
    if (v[b].is_zero()) continue;
    const auto col = act(a, b);
    for (int k = 0; k < dim(); ++k) {
      if (!col[k].is_zero()) r[k] += v[b] * col[k];
    }
  }
  return r;
}

// PBW straightening of u . (Ybar_S (x) e_t) with S = {s1 < s2 < ...}:
//   Y_j, j < s1:   Ybar_{j u S}
//   Y_j, j = s1:   Y_j^<2> . Ybar_{S'}
//   Y_j, j > s1:   -Y_s1 . (Y_j . Ybar_{S'}) + [Y_j, Y_s1] . Ybar_{S'}
//   X,   S empty:  e_∅ (x) rho0(X) e_t
//   X,   else:     [X, Y_s1] . Ybar_{S'} + Y_s1 . (X . Ybar_{S'})
std::vector<Scalar> InducedModule::act(int a, int pos) {
  const std::size_t key = static_cast<std::size_t>(a) * dim() + pos;
  if (memo_[key]) return *memo_[key];
  const Field f = lie_.field();
  std::vector<Scalar> r(static_cast<std::size_t>(dim()), Scalar::zero(f));
  const Subset s = subset_of(pos);
  const int t = v0_of(pos);
  auto add_scaled = [&](const std::vector<Scalar>& v, const Scalar& c) {
    for (int k = 0; k < dim(); ++k) {
      if (!v[k].is_zero()) r[k] += c * v[k];
    }
  };
  const int s1 = s ? __builtin_ctz(s) : -1;
  const Subset rest = s ? (s & (s - 1)) : 0;
  const int rest_pos = s ? index(rest, t) : -1;

  if (!lie_.is_odd(a)) {
    if (!s) {
      const KMatrix& rho0 = v0_.algebra_action[static_cast<std::size_t>(a)];
      for (int u = 0; u < v0_.dim(); ++u) {
        if (!rho0(u, t).is_zero()) r[index(0, u)] += rho0(u, t);
      }
    } else {
      const LieVec& br = lie_.bracket(a, lie_.y(s1));
      for (int m = 0; m < lie_.odd_dim(); ++m) {
        if (!br[lie_.y(m)].is_zero()) add_scaled(act(lie_.y(m), rest_pos), br[lie_.y(m)]);
      }
      add_scaled(act_vec(lie_.y(s1), act(a, rest_pos)), Scalar::one(f));
    }
  } else {
    const int j = a - lie_.even_dim();
    if (!s || j < s1) {
      r[index(s | (Subset{1} << j), t)] = Scalar::one(f);
    } else if (j == s1) {
      const LieVec& q = lie_.two_op(j);
      for (int k = 0; k < lie_.even_dim(); ++k) {
        if (!q[k].is_zero()) add_scaled(act(lie_.x(k), rest_pos), q[k]);
      }
    } else {
      add_scaled(act_vec(lie_.y(s1), act(a, rest_pos)), -Scalar::one(f));
      const LieVec& br = lie_.bracket(a, lie_.y(s1));
      for (int k = 0; k < lie_.even_dim(); ++k) {
        if (!br[k].is_zero()) add_scaled(act(lie_.x(k), rest_pos), br[k]);
      }
    }
  }
  memo_[key] = r;
  return r;
}

KMatrix InducedModule::matrix_of(const LieVec& v) const {
  KMatrix m(lie_.field(), static_cast<std::size_t>(dim()), static_cast<std::size_t>(dim()));
  for (int a = 0; a < lie_.dim(); ++a) {
    if (!v[a].is_zero()) m = m + gen_[a] * v[a];
  }
  return m;
}

std::vector<Coeff> InducedModule::basis_vector(const CoeffAlgebra& alg, Subset s, int t) const {
  std::vector<Coeff> v(static_cast<std::size_t>(dim()), alg.zero());
  v[index(s, t)] = alg.one();
  return v;
}

std::vector<Coeff> InducedModule::apply_odd(const Coeff& eta, int i, const std::vector<Coeff>& v) const {
  const KMatrix& g = gen_[lie_.y(i)];
  std::vector<Coeff> flipped(v.size());
  for (std::size_t b = 0; b < v.size(); ++b) flipped[b] = v[b].flip();
  std::vector<Coeff> r = v;
  for (int a = 0; a < dim(); ++a) {
    Coeff acc = eta.algebra().zero();
    for (int b = 0; b < dim(); ++b) {
      if (!g(a, b).is_zero() && !flipped[b].is_zero()) acc += flipped[b] * g(a, b);
    }
    if (!acc.is_zero()) r[a] += eta * acc;
  }
  return r;
}

SuperMatrix InducedModule::odd_matrix(const Coeff& eta, int i) const {
  const KMatrix& g = gen_[lie_.y(i)];
  SuperMatrix m = SuperMatrix::identity(eta.algebra(), even_dim_, odd_dim());
  for (int a = 0; a < dim(); ++a) {
    for (int b = 0; b < dim(); ++b) {
      if (!g(a, b).is_zero()) m(a, b) += eta * g(a, b);
    }
  }
  return m;
}

SuperMatrix InducedModule::even_matrix(const std::vector<std::vector<Coeff>>& ad, const SuperMatrix& v0g) const {
  const CoeffAlgebra& alg = v0g.algebra();
  SuperMatrix m(alg, even_dim_, odd_dim());
  // M_s = sum_j c[s][j] rho(Y_j); coefficients are even so no signs enter.
  auto apply_ad = [&](int s, const std::vector<Coeff>& w) {
    std::vector<Coeff> r(w.size(), alg.zero());
    std::vector<Coeff> flipped(w.size());
    for (std::size_t b = 0; b < w.size(); ++b) flipped[b] = w[b].flip();
    for (int j = 0; j < lie_.odd_dim(); ++j) {
      const Coeff& c = ad[s][j];
      if (c.is_zero()) continue;
      const KMatrix& g = gen_[lie_.y(j)];
      for (int a = 0; a < dim(); ++a) {
        Coeff acc = alg.zero();
        for (int b = 0; b < dim(); ++b) {
          if (!g(a, b).is_zero() && !flipped[b].is_zero()) acc += flipped[b] * g(a, b);
        }
        if (!acc.is_zero()) r[a] += c * acc;
      }
    }
    return r;
  };
  for (int pos = 0; pos < dim(); ++pos) {
    const Subset s = subset_of(pos);
    const int t = v0_of(pos);
    std::vector<Coeff> w(static_cast<std::size_t>(dim()), alg.zero());
    for (int u = 0; u < v0_.dim(); ++u) w[index(0, u)] = v0g(u, t);
    for (int b = lie_.odd_dim() - 1; b >= 0; --b) {
      if (s & (Subset{1} << b)) w = apply_ad(b, w);
    }
    for (int a = 0; a < dim(); ++a) m(a, pos) = w[a];
  }
  return m;
}

AxiomReport InducedModule::check_module_axioms() const {
  AxiomReport rep;
  const auto& l = lie_;
  for (int a = 0; a < l.dim(); ++a) {
    for (int b = 0; b < l.dim(); ++b) {
      ++rep.checks;
      const KMatrix& ga = gen_[a];
      const KMatrix& gb = gen_[b];
      const KMatrix comm = (l.is_odd(a) && l.is_odd(b)) ? ga * gb + gb * ga : ga * gb - gb * ga;
      if (comm != matrix_of(l.bracket(a, b))) {
        rep.failures.push_back({"module", "(" + l.label(a) + "," + l.label(b) + ")",
                                "action of [u,v] differs from the graded commutator"});
      }
    }
  }
  for (int i = 0; i < l.odd_dim(); ++i) {
    ++rep.checks;
    const KMatrix& g = gen_[l.y(i)];
    if (g * g != matrix_of(l.two_op(l.unit(l.y(i))))) {
      rep.failures.push_back({"module", l.label(l.y(i)), "action of Y^<2> differs from the square of Y"});
    }
  }
  return rep;
}

}  // namespace shc
