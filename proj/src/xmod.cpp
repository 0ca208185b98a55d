#include "lie2/xmod.hpp"

namespace lie2 {

RatMatrix CrossedModule::act(const RatVector& y) const {
  RatMatrix m = RatMatrix::Zero(g.dim(), g.dim());
  for (Index j = 0; j < h.dim(); ++j)
    if (y(j) != 0) m += y(j) * action[j];
  return m;
}

namespace {
bool same_list(const std::vector<RatMatrix>& a, const std::vector<RatMatrix>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same(a[i], b[i])) return false;
  return true;
}
}  // namespace

bool operator==(const CrossedModule& a, const CrossedModule& b) {
  return a.g == b.g && a.h == b.h && same(a.mu, b.mu) && same_list(a.action, b.action);
}

CrossedModule identity_xmod(const LieAlgebra& L) {
  CrossedModule X{L, L, RatMatrix::Identity(L.dim(), L.dim()), {}};
  for (Index i = 0; i < L.dim(); ++i) X.action.push_back(L.ad(i));
  return X;
}

CrossedModule lie_algebra_as_xmod(const LieAlgebra& h) {
  return {LieAlgebra(0), h, RatMatrix(h.dim(), 0), std::vector<RatMatrix>(h.dim(), RatMatrix(0, 0))};
}

Report check_crossed_module(const CrossedModule& X) {
  Report out;
  const Index n = X.g.dim(), m = X.h.dim();
  if (X.mu.rows() != m || X.mu.cols() != n || static_cast<Index>(X.action.size()) != m) {
    out.push_back({"shape", {}, "mu or action has the wrong shape"});
    return out;
  }
  for (const auto& a : X.action)
    if (a.rows() != n || a.cols() != n) {
      out.push_back({"shape", {}, "action matrix has the wrong shape"});
      return out;
    }
  for (auto v : check_lie_algebra(X.g)) {
    v.family = "g." + v.family;
    out.push_back(v);
  }
  for (auto v : check_lie_algebra(X.h)) {
    v.family = "h." + v.family;
    out.push_back(v);
  }
  for (auto v : check_rep(X.action_rep())) {
    v.family = "action." + v.family;
    out.push_back(v);
  }
  for (Index j = 0; j < m; ++j)
    for (Index i = 0; i < n; ++i) {
      RatVector lhs = X.mu * X.action[j].col(i);
      RatVector rhs = X.h.bracket(RatVector::Unit(m, j), X.mu.col(i));
      if (lhs != rhs) out.push_back({"equivariance", {j, i}, "mu(L_y x) != [y, mu x]"});
    }
  for (Index a = 0; a < n; ++a) {
    RatMatrix la = X.act(X.mu.col(a));
    for (Index b = 0; b < n; ++b)
      if (RatVector(la.col(b)) != X.g.bracket_basis(a, b))
        out.push_back({"peiffer", {a, b}, "L_{mu x0} x1 != [x0, x1]"});
  }
  for (Index j = 0; j < m; ++j)
    for (Index a = 0; a < n; ++a)
      for (Index b = a + 1; b < n; ++b) {
        const RatMatrix& L = X.action[j];
        RatVector lhs = L * X.g.bracket_basis(a, b);
        RatVector rhs = X.g.bracket(L.col(a), RatVector::Unit(n, b)) + X.g.bracket(RatVector::Unit(n, a), L.col(b));
        if (lhs != rhs) out.push_back({"derivation", {j, a, b}, "L_y is not a derivation"});
      }
  return out;
}

LieAlgebra semidirect_sum(const CrossedModule& X) {
  const Index n = X.g.dim(), m = X.h.dim(), d = n + m;
  LieAlgebra out(d);
  for (Index a = 0; a < d; ++a)
    for (Index b = a + 1; b < d; ++b) {
      RatVector v = RatVector::Zero(d);
      if (a < n && b < n) {
        v.head(n) = X.g.bracket_basis(a, b);
      } else if (a < n) {
        v.head(n) = -X.action[b - n].col(a);  // [(x,0),(0,y)] = (-L_y x, 0)
      } else {
        v.tail(m) = X.h.bracket_basis(a - n, b - n);
      }
      out.set_bracket(a, b, v);
    }
  return out;
}

StructuralMaps structural_maps(const CrossedModule& X) {
  const Index n = X.g.dim(), m = X.h.dim();
  StructuralMaps sm;
  sm.s = RatMatrix::Zero(m, n + m);
  sm.s.rightCols(m).setIdentity();
  sm.t = sm.s;
  sm.t.leftCols(n) = X.mu;
  sm.i = RatMatrix::Zero(n + m, n + m);
  sm.i.topLeftCorner(n, n) = -RatMatrix::Identity(n, n);
  sm.i.bottomLeftCorner(m, n) = X.mu;
  sm.i.bottomRightCorner(m, m).setIdentity();
  sm.u = RatMatrix::Zero(n + m, m);
  sm.u.bottomRows(m).setIdentity();
  sm.mu = X.mu;
  return sm;
}

RatVector StructuralMaps::compose(const RatVector& a_prime, const RatVector& a) const {
  const Index n = mu.cols();
  if (RatVector(s * a_prime) != RatVector(t * a)) throw ComposabilityError("arrows are not composable");
  RatVector out = a;
  out.head(n) += a_prime.head(n);
  return out;
}

CrossedModule from_groupoid(const LieAlgebra& arrows, const RatMatrix& s, const RatMatrix& t, const RatMatrix& u) {
  const Index m = s.rows();
  if (rank(s) != m) throw DomainError("source map is not surjective");
  if (RatMatrix(s * u) != RatMatrix::Identity(m, m) || RatMatrix(t * u) != RatMatrix::Identity(m, m))
    throw DomainError("unit is not a section of source and target");
  Subspace K = kernel_basis(s);
  CrossedModule X;
  X.g = restrict_to(arrows, K.basis);
  X.h = LieAlgebra(m);
  for (Index a = 0; a < m; ++a)
    for (Index b = a + 1; b < m; ++b) X.h.set_bracket(a, b, s * arrows.bracket(u.col(a), u.col(b)));
  X.mu = t * K.basis;
  for (Index j = 0; j < m; ++j) {
    RatMatrix L(K.dim(), K.dim());
    for (Index k = 0; k < K.dim(); ++k) {
      auto c = solve(K.basis, arrows.bracket(u.col(j), K.basis.col(k)));
      if (!c) throw DomainError("kernel of the source is not preserved by units");
      L.col(k) = *c;
    }
    X.action.push_back(L);
  }
  return X;
}

RatMatrix nerve_embedding(const CrossedModule& X, Index p) {
  const Index n = X.g.dim(), m = X.h.dim();
  RatMatrix e = RatMatrix::Zero(p * (n + m), p * n + m);
  for (Index i = 0; i < p; ++i) {
    const Index row = i * (n + m);
    e.block(row, i * n, n, n).setIdentity();
    e.block(row + n, p * n, m, m).setIdentity();
    for (Index k = i + 1; k < p; ++k) e.block(row + n, k * n, m, n) = X.mu;
  }
  return e;
}

NerveSpace nerve_space(const CrossedModule& X, Index p) {
  if (p < 0) throw InputError("nerve level must be non-negative");
  const Index n = X.g.dim(), m = X.h.dim(), d = p * n + m;
  NerveSpace N{p, n, m, LieAlgebra(d)};
  if (p == 0) {
    N.algebra = X.h;
    return N;
  }
  const LieAlgebra arrow = semidirect_sum(X);
  const RatMatrix e = nerve_embedding(X, p);
  const Index a = n + m;
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      RatVector v(d);
      for (Index c = 0; c < p; ++c) {
        RatVector bc = arrow.bracket(e.block(c * a, i, a, 1), e.block(c * a, j, a, 1));
        v.segment(c * n, n) = bc.head(n);
        if (c == p - 1) v.tail(m) = bc.tail(m);
      }
      N.algebra.set_bracket(i, j, v);
    }
  return N;
}

RatMatrix face_map(const CrossedModule& X, Index p, Index k) {
  if (p < 0 || k < 0 || k > p + 1) throw InputError("face index out of range");
  const Index n = X.g.dim(), m = X.h.dim();
  RatMatrix f = RatMatrix::Zero(p * n + m, (p + 1) * n + m);
  f.rightCols(m).bottomRows(m).setIdentity();
  if (k == 0) {
    for (Index b = 1; b <= p; ++b) f.block((b - 1) * n, b * n, n, n).setIdentity();
  } else if (k <= p) {
    for (Index b = 0; b <= p; ++b) {
      const Index to = b < k ? b : b - 1;
      f.block(to * n, b * n, n, n).setIdentity();
    }
  } else {
    for (Index b = 0; b < p; ++b) f.block(b * n, b * n, n, n).setIdentity();
    f.block(p * n, p * n, m, n) = X.mu;
  }
  return f;
}

RatMatrix final_target(const CrossedModule& X, Index p) {
  const Index n = X.g.dim(), m = X.h.dim();
  RatMatrix t(m, p * n + m);
  for (Index b = 0; b < p; ++b) t.block(0, b * n, m, n) = X.mu;
  t.rightCols(m).setIdentity();
  return t;
}

QuotientAlgebra quotient_algebra(const LieAlgebra& h, const Subspace& ideal) {
  const Index m = h.dim();
  for (Index j = 0; j < m; ++j)
    for (Index i = 0; i < ideal.dim(); ++i)
      if (!in_span(ideal, h.bracket(RatVector::Unit(m, j), ideal.basis.col(i))))
        throw DomainError("subspace is not an ideal");
  RowEchelon<Rat> e(m);
  for (Index i = 0; i < ideal.dim(); ++i) e.insert(sparse_column(ideal.basis, i));
  std::vector<Index> comp;
  for (Index j = 0; j < m; ++j) {
    SparseRow<Rat> unit{{j, Rat(1)}};
    if (e.insert(unit)) comp.push_back(j);
  }
  const Index dq = static_cast<Index>(comp.size());
  QuotientAlgebra Q;
  Q.section = RatMatrix::Zero(m, dq);
  for (Index c = 0; c < dq; ++c) Q.section(comp[c], c) = 1;
  RatMatrix full(m, ideal.dim() + dq);
  full << ideal.basis, Q.section;
  Q.projection = RatMatrix(dq, m);
  for (Index j = 0; j < m; ++j) {
    auto x = solve(full, RatVector::Unit(m, j));
    Q.projection.col(j) = x->tail(dq);
  }
  Q.algebra = LieAlgebra(dq);
  for (Index a = 0; a < dq; ++a)
    for (Index b = a + 1; b < dq; ++b)
      Q.algebra.set_bracket(a, b, Q.projection * h.bracket(Q.section.col(a), Q.section.col(b)));
  return Q;
}

GroupoidInvariants groupoid_invariants(const CrossedModule& X) {
  GroupoidInvariants inv;
  inv.orbit_space_dim = X.h.dim() - rank(X.mu);
  inv.isotropy = kernel_basis(X.mu);
  const RatMatrix& K = inv.isotropy.basis;
  for (Index a = 0; a < K.cols(); ++a)
    for (Index i = 0; i < X.g.dim(); ++i)
      if (!is_zero(RatMatrix(X.g.bracket(K.col(a), RatVector::Unit(X.g.dim(), i)))))
        throw DomainError("ker mu is not central");
  QuotientAlgebra Q = quotient_algebra(X.h, column_space(X.mu));
  inv.quotient_rep.algebra = Q.algebra;
  inv.quotient_rep.space_dim = K.cols();
  for (Index c = 0; c < Q.algebra.dim(); ++c) {
    RatMatrix L = X.act(Q.section.col(c));
    RatMatrix M(K.cols(), K.cols());
    for (Index k = 0; k < K.cols(); ++k) M.col(k) = *solve(K, L * K.col(k));
    inv.quotient_rep.mats.push_back(M);
  }
  for (Index i = 0; i < X.g.dim(); ++i)
    if (!is_zero(RatMatrix(X.act(X.mu.col(i)) * K))) throw DomainError("orbit directions act on ker mu");
  return inv;
}

CrossedModule from_tuple(const LieAlgebra& h, const Subspace& ideal, Index v_dim, const LinRep& rep) {
  QuotientAlgebra Q = quotient_algebra(h, ideal);
  if (rep.algebra.dim() != Q.algebra.dim() || rep.space_dim != v_dim)
    throw InputError("representation does not match the quotient");
  const Index di = ideal.dim(), n = v_dim + di, m = h.dim();
  LieAlgebra I = restrict_to(h, ideal.basis);
  CrossedModule X;
  X.h = h;
  X.g = LieAlgebra(n);
  for (Index a = 0; a < di; ++a)
    for (Index b = a + 1; b < di; ++b) {
      RatVector v = RatVector::Zero(n);
      v.tail(di) = I.bracket_basis(a, b);
      X.g.set_bracket(v_dim + a, v_dim + b, v);
    }
  X.mu = RatMatrix::Zero(m, n);
  X.mu.rightCols(di) = ideal.basis;
  for (Index j = 0; j < m; ++j) {
    RatMatrix L = RatMatrix::Zero(n, n);
    L.topLeftCorner(v_dim, v_dim) = rep.act(Q.projection.col(j));
    for (Index a = 0; a < di; ++a)
      L.block(v_dim, v_dim + a, di, 1) = *solve(ideal.basis, h.bracket(RatVector::Unit(m, j), ideal.basis.col(a)));
    X.action.push_back(L);
  }
  return X;
}

}  // namespace lie2
