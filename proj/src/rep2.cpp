#include "lie2/rep2.hpp"
#include "lie2/tuples.hpp"

namespace lie2 {

namespace {

RatMatrix combine(const std::vector<RatMatrix>& mats, const RatVector& c, Index rows, Index cols) {
  RatMatrix m = RatMatrix::Zero(rows, cols);
  for (Index i = 0; i < c.size(); ++i)
    if (c(i) != 0) m += c(i) * mats[i];
  return m;
}

bool shapes_ok(const std::vector<RatMatrix>& mats, Index count, Index rows, Index cols) {
  if (static_cast<Index>(mats.size()) != count) return false;
  for (const auto& m : mats)
    if (m.rows() != rows || m.cols() != cols) return false;
  return true;
}

}  // namespace

RatMatrix TwoRep::rho00_of(const RatVector& y) const { return combine(rho00, y, v_dim(), v_dim()); }
RatMatrix TwoRep::rho01_of(const RatVector& y) const { return combine(rho01, y, w_dim(), w_dim()); }
RatMatrix TwoRep::rho1_of(const RatVector& x) const { return combine(rho1, x, w_dim(), v_dim()); }

namespace {
bool same_list(const std::vector<RatMatrix>& a, const std::vector<RatMatrix>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same(a[i], b[i])) return false;
  return true;
}
}  // namespace

bool operator==(const TwoRep& a, const TwoRep& b) {
  return a.source == b.source && a.target == b.target && same_list(a.rho00, b.rho00) &&
         same_list(a.rho01, b.rho01) && same_list(a.rho1, b.rho1);
}

TwoRep trivial_two_rep(const CrossedModule& X, const TwoVect& target) {
  const Index w = target.w_dim, v = target.v_dim;
  return {X, target, std::vector<RatMatrix>(X.h.dim(), RatMatrix::Zero(v, v)),
          std::vector<RatMatrix>(X.h.dim(), RatMatrix::Zero(w, w)),
          std::vector<RatMatrix>(X.g.dim(), RatMatrix::Zero(w, v))};
}

Report check_two_rep(const TwoRep& r) {
  Report out;
  const Index n = r.g_dim(), m = r.h_dim(), w = r.w_dim(), v = r.v_dim();
  if (r.phi().rows() != v || r.phi().cols() != w || !shapes_ok(r.rho00, m, v, v) || !shapes_ok(r.rho01, m, w, w) ||
      !shapes_ok(r.rho1, n, w, v)) {
    out.push_back({"shape", {}, "component matrices have the wrong shape"});
    return out;
  }
  for (auto x : check_rep({r.source.h, v, r.rho00})) {
    x.family = "rho00." + x.family;
    out.push_back(x);
  }
  for (auto x : check_rep({r.source.h, w, r.rho01})) {
    x.family = "rho01." + x.family;
    out.push_back(x);
  }
  const RatMatrix& phi = r.phi();
  for (Index j = 0; j < m; ++j)
    if (RatMatrix(phi * r.rho01[j]) != RatMatrix(r.rho00[j] * phi))
      out.push_back({"phi-intertwines", {j}, "phi rho01(y) != rho00(y) phi"});
  for (Index i = 0; i < n; ++i) {
    RatVector mx = r.source.mu.col(i);
    if (r.rho00_of(mx) != RatMatrix(phi * r.rho1[i])) out.push_back({"rho00-mu", {i}, "rho00(mu x) != phi rho1(x)"});
    if (r.rho01_of(mx) != RatMatrix(r.rho1[i] * phi)) out.push_back({"rho01-mu", {i}, "rho01(mu x) != rho1(x) phi"});
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b) {
      RatMatrix lhs = r.rho1_of(r.source.g.bracket_basis(a, b));
      RatMatrix rhs = r.rho1[a] * phi * r.rho1[b] - r.rho1[b] * phi * r.rho1[a];
      if (lhs != rhs) out.push_back({"rho1-bracket", {a, b}, ""});
    }
  for (Index j = 0; j < m; ++j)
    for (Index i = 0; i < n; ++i) {
      RatMatrix lhs = r.rho1_of(r.source.action[j].col(i));
      RatMatrix rhs = r.rho01[j] * r.rho1[i] - r.rho1[i] * r.rho00[j];
      if (lhs != rhs) out.push_back({"rho1-equivariance", {j, i}, ""});
    }
  return out;
}

LinRep bar_rep(const TwoRep& r) {
  const Index n = r.g_dim(), m = r.h_dim(), w = r.w_dim(), v = r.v_dim();
  LinRep out{semidirect_sum(r.source), w + v, {}};
  for (Index i = 0; i < n; ++i) {
    RatMatrix a = RatMatrix::Zero(w + v, w + v);
    a.topLeftCorner(w, w) = r.rho01_of(r.source.mu.col(i));
    a.topRightCorner(w, v) = r.rho1[i];
    out.mats.push_back(a);
  }
  for (Index j = 0; j < m; ++j) {
    RatMatrix a = RatMatrix::Zero(w + v, w + v);
    a.topLeftCorner(w, w) = r.rho01[j];
    a.bottomRightCorner(v, v) = r.rho00[j];
    out.mats.push_back(a);
  }
  return out;
}

CrossedModule semidirect_product(const TwoRep& r) {
  const Index n = r.g_dim(), m = r.h_dim(), w = r.w_dim(), v = r.v_dim();
  CrossedModule X;
  X.g = LieAlgebra(n + w);
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      RatVector c = RatVector::Zero(n + w);
      c.head(n) = r.source.g.bracket_basis(a, b);
      X.g.set_bracket(a, b, c);
    }
    RatMatrix act = r.rho01_of(r.source.mu.col(a));
    for (Index k = 0; k < w; ++k) {
      RatVector c = RatVector::Zero(n + w);
      c.tail(w) = act.col(k);
      X.g.set_bracket(a, n + k, c);
    }
  }
  X.h = LieAlgebra(m + v);
  for (Index a = 0; a < m; ++a) {
    for (Index b = a + 1; b < m; ++b) {
      RatVector c = RatVector::Zero(m + v);
      c.head(m) = r.source.h.bracket_basis(a, b);
      X.h.set_bracket(a, b, c);
    }
    for (Index k = 0; k < v; ++k) {
      RatVector c = RatVector::Zero(m + v);
      c.tail(v) = r.rho00[a].col(k);
      X.h.set_bracket(a, m + k, c);
    }
  }
  X.mu = RatMatrix::Zero(m + v, n + w);
  X.mu.topLeftCorner(m, n) = r.source.mu;
  X.mu.bottomRightCorner(v, w) = r.phi();
  // L_{(y,v)}(x,w) = (L_y x, rho01(y) w - rho1(x) v)
  for (Index a = 0; a < m; ++a) {
    RatMatrix L = RatMatrix::Zero(n + w, n + w);
    L.topLeftCorner(n, n) = r.source.action[a];
    L.bottomRightCorner(w, w) = r.rho01[a];
    X.action.push_back(L);
  }
  for (Index k = 0; k < v; ++k) {
    RatMatrix L = RatMatrix::Zero(n + w, n + w);
    for (Index i = 0; i < n; ++i) L.block(n, i, w, 1) = -r.rho1[i].col(k);
    X.action.push_back(L);
  }
  return X;
}

TwoRep adjoint_rep(const CrossedModule& X) {
  const Index n = X.g.dim(), m = X.h.dim();
  TwoRep r{X, {n, m, X.mu}, {}, X.action, {}};
  for (Index j = 0; j < m; ++j) r.rho00.push_back(X.h.ad(j));
  for (Index i = 0; i < n; ++i) {
    RatMatrix a(n, m);
    for (Index u = 0; u < m; ++u) a.col(u) = -X.action[u].col(i);
    r.rho1.push_back(a);
  }
  return r;
}

LinRep rep_r(const TwoRep& r, Index rr) {
  if (rr < 1) throw InputError("rep_r needs rr >= 1; degree 0 uses rho00");
  const Index n = r.g_dim(), w = r.w_dim();
  TupleIndex Z(n, rr);
  const Index d = Z.size() * w;
  LinRep out{r.source.h, d, {}};
  std::vector<Index> t;
  for (Index j = 0; j < r.h_dim(); ++j) {
    const RatMatrix& L = r.source.action[j];
    RatMatrix M = RatMatrix::Zero(d, d);
    for (Index z = 0; z < Z.size(); ++z) {
      auto T = Z.tuple(z);
      M.block(z * w, z * w, w, w) += r.rho01[j];
      for (Index k = 0; k < rr; ++k)
        for (Index mm = 0; mm < n; ++mm) {
          const Rat& c = L(mm, T[k]);
          if (c == 0) continue;
          t.assign(T.begin(), T.end());
          t[k] = mm;
          const int s = sort_sign(t);
          if (s == 0) continue;
          const Index src = Z.rank(t);
          for (Index a = 0; a < w; ++a) M(z * w + a, src * w + a) -= s * c;
        }
    }
    out.mats.push_back(M);
  }
  return out;
}

std::pair<RatMatrix, RatMatrix> to_glphi_coordinates(const TwoRep& r, const GlPhi& G) {
  RatMatrix arrows(G.arrows_dim(), r.g_dim());
  for (Index i = 0; i < r.g_dim(); ++i)
    for (Index a = 0; a < r.w_dim(); ++a)
      for (Index b = 0; b < r.v_dim(); ++b) arrows(a * r.v_dim() + b, i) = r.rho1[i](a, b);
  RatMatrix objects(G.objects_dim(), r.h_dim());
  for (Index j = 0; j < r.h_dim(); ++j) objects.col(j) = G.object_coords(r.rho01[j], r.rho00[j]);
  return {arrows, objects};
}

Report check_extension(const SplitExtension& se) {
  Report out;
  const TwoExtension& e = se.ext;
  const CrossedModule& E = e.total;
  const Index n = e.base.g.dim(), m = e.base.h.dim(), w = e.kernel.w_dim, v = e.kernel.v_dim;
  const Index e1 = E.g.dim(), e0 = E.h.dim();
  if (e.j1.rows() != e1 || e.j1.cols() != w || e.pi1.rows() != n || e.pi1.cols() != e1 || e.j0.rows() != e0 ||
      e.j0.cols() != v || e.pi0.rows() != m || e.pi0.cols() != e0 || se.sigma1.rows() != e1 ||
      se.sigma1.cols() != n || se.sigma0.rows() != e0 || se.sigma0.cols() != m) {
    out.push_back({"shape", {}, "extension maps have the wrong shape"});
    return out;
  }
  for (auto x : check_crossed_module(E)) {
    x.family = "total." + x.family;
    out.push_back(x);
  }
  auto exact = [&](const RatMatrix& j, const RatMatrix& pi, Index k, const char* level) {
    if (rank(j) != j.cols() || rank(pi) != pi.rows() || j.cols() + pi.rows() != j.rows() || !is_zero(RatMatrix(pi * j)))
      out.push_back({"exactness", {k}, level});
  };
  exact(e.j1, e.pi1, 1, "top row is not short exact");
  exact(e.j0, e.pi0, 0, "bottom row is not short exact");
  if (!is_homomorphism(E.g, e.base.g, e.pi1)) out.push_back({"pi1-hom", {}, ""});
  if (!is_homomorphism(E.h, e.base.h, e.pi0)) out.push_back({"pi0-hom", {}, ""});
  if (!is_homomorphism(LieAlgebra(w), E.g, e.j1)) out.push_back({"j1-hom", {}, "kernel is not abelian"});
  if (!is_homomorphism(LieAlgebra(v), E.h, e.j0)) out.push_back({"j0-hom", {}, "kernel is not abelian"});
  if (RatMatrix(E.mu * e.j1) != RatMatrix(e.j0 * e.kernel.phi)) out.push_back({"kernel-square", {}, ""});
  if (RatMatrix(e.pi0 * E.mu) != RatMatrix(e.base.mu * e.pi1)) out.push_back({"base-square", {}, ""});
  for (Index k = 0; k < e0; ++k) {
    RatMatrix lhs = e.pi1 * E.action[k];
    RatMatrix rhs = e.base.act(e.pi0.col(k)) * e.pi1;
    if (lhs != rhs) out.push_back({"pi-equivariance", {k}, ""});
  }
  if (RatMatrix(e.pi1 * se.sigma1) != RatMatrix::Identity(n, n)) out.push_back({"splitting", {1}, ""});
  if (RatMatrix(e.pi0 * se.sigma0) != RatMatrix::Identity(m, m)) out.push_back({"splitting", {0}, ""});
  return out;
}

TwoRep tautological_rep(const TwoVect& t) {
  GlPhi G = glphi(t);
  TwoRep r{glphi_as_crossed_module(G), t, {}, {}, {}};
  for (Index k = 0; k < G.objects_dim(); ++k) {
    auto [F, f] = G.object(k);
    r.rho01.push_back(F);
    r.rho00.push_back(f);
  }
  for (Index i = 0; i < G.arrows_dim(); ++i) r.rho1.push_back(G.arrow(i));
  return r;
}

ExtensionData zero_data(const TwoRep& r) {
  return {r, RatMatrix::Zero(r.v_dim(), binomial(r.h_dim(), 2)),
          std::vector<RatMatrix>(r.h_dim(), RatMatrix::Zero(r.w_dim(), r.g_dim())),
          RatMatrix::Zero(r.v_dim(), r.g_dim())};
}

RatVector alpha_of(const ExtensionData& d, const RatVector& y, const RatVector& x) {
  RatVector out = RatVector::Zero(d.rep.w_dim());
  for (Index j = 0; j < y.size(); ++j)
    if (y(j) != 0) out += y(j) * (d.alpha[j] * x);
  return out;
}

RatVector omega0_of(const ExtensionData& d, const RatVector& y0, const RatVector& y1) {
  const Index m = d.rep.h_dim();
  TupleIndex P(m, 2);
  RatVector out = RatVector::Zero(d.rep.v_dim());
  for (Index p = 0; p < P.size(); ++p) {
    auto t = P.tuple(p);
    Rat c = y0(t[0]) * y1(t[1]) - y0(t[1]) * y1(t[0]);
    if (c != 0) out += c * d.omega0.col(p);
  }
  return out;
}

RatVector omega1_of(const ExtensionData& d, const RatVector& x0, const RatVector& x1) {
  return d.rep.rho1_of(x1) * (d.varphi * x0) + alpha_of(d, d.rep.source.mu * x0, x1);
}

RatMatrix omega1_tensor(const ExtensionData& d) {
  const Index n = d.rep.g_dim();
  TupleIndex P(n, 2);
  RatMatrix out(d.rep.w_dim(), P.size());
  for (Index p = 0; p < P.size(); ++p) {
    auto t = P.tuple(p);
    out.col(p) = omega1_of(d, RatVector::Unit(n, t[0]), RatVector::Unit(n, t[1]));
  }
  return out;
}

InducedData rep_from_extension(const SplitExtension& se) {
  const TwoExtension& e = se.ext;
  const CrossedModule& E = e.total;
  const CrossedModule& X = e.base;
  const Index n = X.g.dim(), m = X.h.dim(), w = e.kernel.w_dim, v = e.kernel.v_dim;
  if (RatMatrix(e.pi1 * se.sigma1) != RatMatrix::Identity(n, n) ||
      RatMatrix(e.pi0 * se.sigma0) != RatMatrix::Identity(m, m))
    throw DomainError("sigma is not a splitting");
  auto in_v = [&](const RatVector& z) {
    if (!is_zero(RatMatrix(e.pi0 * z))) throw DomainError("twist term is not annihilated by pi0");
    return RatVector(*solve(e.j0, z));
  };
  auto in_w = [&](const RatVector& z) {
    if (!is_zero(RatMatrix(e.pi1 * z))) throw DomainError("twist term is not annihilated by pi1");
    return RatVector(*solve(e.j1, z));
  };
  auto L = [&](const RatVector& a, const RatVector& b) { return RatVector(E.act(a) * b); };

  InducedData out;
  TwoRep& r = out.data.rep;
  r.source = X;
  r.target = e.kernel;
  for (Index j = 0; j < m; ++j) {
    RatVector s0 = se.sigma0.col(j);
    RatMatrix a(v, v), b(w, w);
    for (Index k = 0; k < v; ++k) a.col(k) = in_v(E.h.bracket(s0, e.j0.col(k)));
    for (Index k = 0; k < w; ++k) b.col(k) = in_w(L(s0, e.j1.col(k)));
    r.rho00.push_back(a);
    r.rho01.push_back(b);
  }
  for (Index i = 0; i < n; ++i) {
    RatMatrix a(w, v);
    for (Index k = 0; k < v; ++k) a.col(k) = -in_w(L(e.j0.col(k), se.sigma1.col(i)));
    r.rho1.push_back(a);
  }
  ExtensionData& d = out.data;
  TupleIndex Ph(m, 2), Pg(n, 2);
  d.omega0 = RatMatrix(v, Ph.size());
  for (Index p = 0; p < Ph.size(); ++p) {
    auto t = Ph.tuple(p);
    d.omega0.col(p) = in_v(se.sigma0 * X.h.bracket_basis(t[0], t[1]) -
                           E.h.bracket(se.sigma0.col(t[0]), se.sigma0.col(t[1])));
  }
  d.varphi = RatMatrix(v, n);
  for (Index i = 0; i < n; ++i) d.varphi.col(i) = in_v(E.mu * se.sigma1.col(i) - se.sigma0 * X.mu.col(i));
  for (Index j = 0; j < m; ++j) {
    RatMatrix a(w, n);
    for (Index i = 0; i < n; ++i)
      a.col(i) = in_w(se.sigma1 * X.action[j].col(i) - L(se.sigma0.col(j), se.sigma1.col(i)));
    d.alpha.push_back(a);
  }
  out.omega1 = RatMatrix(w, Pg.size());
  for (Index p = 0; p < Pg.size(); ++p) {
    auto t = Pg.tuple(p);
    out.omega1.col(p) =
        in_w(se.sigma1 * X.g.bracket_basis(t[0], t[1]) - E.g.bracket(se.sigma1.col(t[0]), se.sigma1.col(t[1])));
  }
  if (out.omega1 != omega1_tensor(d)) throw DomainError("omega1 does not match rho1 varphi + alpha");
  return out;
}

}  // namespace lie2
