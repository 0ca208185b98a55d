#include "lie2/ext.hpp"

#include <array>

namespace lie2 {

namespace detail {
RatVector embed_with_signs(const CochainComplex& cx, const ExtensionData& d, const std::array<int, 4>& s);
}

namespace {

RatVector unit(Index n, Index i) { return RatVector::Unit(n, i); }

// All six equations as residue vectors handed to `sink`.
template <typename Sink>
void cocycle_residues(const ExtensionData& d, Sink&& sink) {
  const TwoRep& r = d.rep;
  const CrossedModule& X = r.source;
  const Index n = r.g_dim(), m = r.h_dim();
  auto om = [&](const RatVector& a, const RatVector& b) { return omega0_of(d, a, b); };
  auto al = [&](const RatVector& y, const RatVector& x) { return alpha_of(d, y, x); };
  auto om1 = [&](const RatVector& a, const RatVector& b) { return omega1_of(d, a, b); };
  auto L = [&](const RatVector& y, const RatVector& x) { return RatVector(X.act(y) * x); };

  for (Index a = 0; a < m; ++a)
    for (Index b = a + 1; b < m; ++b)
      for (Index c = b + 1; c < m; ++c) {
        const std::array<RatVector, 3> y{unit(m, a), unit(m, b), unit(m, c)};
        RatVector res = RatVector::Zero(r.v_dim());
        for (int k = 0; k < 3; ++k) {
          const RatVector &y0 = y[k], &y1 = y[(k + 1) % 3], &y2 = y[(k + 2) % 3];
          res += r.rho00_of(y0) * om(y1, y2) - om(X.h.bracket(y0, y1), y2);
        }
        sink("i", std::vector<Index>{a, b, c}, res);
      }
  for (Index a = 0; a < n; ++a)
    for (Index b = a; b < n; ++b) sink("ii", std::vector<Index>{a, b}, RatVector(om1(unit(n, a), unit(n, b)) + om1(unit(n, b), unit(n, a))));
  // omega1 is a CE 2-cocycle of g with values in rho01 o mu
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b)
      for (Index c = b + 1; c < n; ++c) {
        const std::array<RatVector, 3> x{unit(n, a), unit(n, b), unit(n, c)};
        RatVector res = RatVector::Zero(r.w_dim());
        res += r.rho01_of(X.mu * x[0]) * om1(x[1], x[2]);
        res -= r.rho01_of(X.mu * x[1]) * om1(x[0], x[2]);
        res += r.rho01_of(X.mu * x[2]) * om1(x[0], x[1]);
        res -= om1(X.g.bracket(x[0], x[1]), x[2]);
        res += om1(X.g.bracket(x[0], x[2]), x[1]);
        res -= om1(X.g.bracket(x[1], x[2]), x[0]);
        sink("iii", std::vector<Index>{a, b, c}, res);
      }
  for (Index j = 0; j < m; ++j)
    for (Index i = 0; i < n; ++i) {
      const RatVector y = unit(m, j), x = unit(n, i);
      RatVector res = om(y, X.mu * x) - r.phi() * al(y, x) - r.rho00_of(y) * (d.varphi * x) + d.varphi * L(y, x);
      sink("iv", std::vector<Index>{j, i}, res);
    }
  for (Index a = 0; a < m; ++a)
    for (Index b = a + 1; b < m; ++b)
      for (Index i = 0; i < n; ++i) {
        const RatVector y0 = unit(m, a), y1 = unit(m, b), x = unit(n, i);
        RatVector res = r.rho1_of(x) * om(y0, y1) - al(X.h.bracket(y0, y1), x);
        res -= r.rho01_of(y1) * al(y0, x) + al(y1, L(y0, x)) - r.rho01_of(y0) * al(y1, x) - al(y0, L(y1, x));
        sink("v", std::vector<Index>{a, b, i}, res);
      }
  for (Index j = 0; j < m; ++j)
    for (Index a = 0; a < n; ++a)
      for (Index b = a + 1; b < n; ++b) {
        const RatVector y = unit(m, j), x0 = unit(n, a), x1 = unit(n, b);
        RatVector res = r.rho01_of(X.mu * x0) * al(y, x1) - r.rho01_of(X.mu * x1) * al(y, x0) - al(y, X.g.bracket(x0, x1));
        res -= r.rho01_of(y) * om1(x0, x1) - om1(L(y, x0), x1) + om1(L(y, x1), x0);
        sink("vi", std::vector<Index>{j, a, b}, res);
      }
}

std::string describe(const RatVector& v) {
  std::string s = "residue (";
  for (Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_rat(v(i));
  return s + ")";
}

}  // namespace

Report cocycle_check(const ExtensionData& d) {
  Report out;
  cocycle_residues(d, [&](const char* fam, std::vector<Index> where, const RatVector& res) {
    if (!is_zero(RatMatrix(res))) out.push_back({fam, std::move(where), describe(res)});
  });
  return out;
}

RatVector cocycle_residue_vector(const ExtensionData& d) {
  std::vector<RatVector> parts;
  Index total = 0;
  cocycle_residues(d, [&](const char*, const std::vector<Index>&, const RatVector& res) {
    parts.push_back(res);
    total += res.size();
  });
  RatVector out(total);
  Index at = 0;
  for (const auto& p : parts) {
    out.segment(at, p.size()) = p;
    at += p.size();
  }
  return out;
}

Index data_dim(const TwoRep& r) {
  const Index n = r.g_dim(), m = r.h_dim();
  return r.v_dim() * binomial(m, 2) + m * r.w_dim() * n + r.v_dim() * n;
}

RatVector data_vector(const ExtensionData& d) {
  const TwoRep& r = d.rep;
  RatVector v(data_dim(r));
  Index at = 0;
  auto put = [&](const RatMatrix& M) {
    v.segment(at, M.size()) = M.reshaped();
    at += M.size();
  };
  put(d.omega0);
  for (const auto& a : d.alpha) put(a);
  put(d.varphi);
  return v;
}

ExtensionData data_from_vector(const TwoRep& r, const RatVector& v) {
  if (v.size() != data_dim(r)) throw InputError("parameter vector has the wrong length");
  ExtensionData d = zero_data(r);
  Index at = 0;
  auto take = [&](RatMatrix& M) {
    M = v.segment(at, M.size()).reshaped(M.rows(), M.cols());
    at += M.size();
  };
  take(d.omega0);
  for (auto& a : d.alpha) take(a);
  take(d.varphi);
  return d;
}

SplitExtension assemble_extension(const ExtensionData& d) {
  const TwoRep& r = d.rep;
  const CrossedModule& X = r.source;
  const Index n = r.g_dim(), m = r.h_dim(), w = r.w_dim(), v = r.v_dim();
  const Index N1 = n + w, N0 = m + v;

  // e1 = g (+) W: [(x0,w0),(x1,w1)] = ([x0,x1], rho01(mu x0) w1 - rho01(mu x1) w0 - omega1(x0,x1)),
  // written constant by constant so that a non-skew omega1 shows up as an antisymmetry failure
  std::vector<Rat> c1(N1 * N1 * N1, Rat(0));
  auto C1 = [&](Index i, Index j, Index k) -> Rat& { return c1[(i * N1 + j) * N1 + k]; };
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      RatVector b = X.g.bracket_basis(i, j);
      RatVector t = -omega1_of(d, unit(n, i), unit(n, j));
      for (Index k = 0; k < n; ++k) C1(i, j, k) = b(k);
      for (Index k = 0; k < w; ++k) C1(i, j, n + k) = t(k);
    }
  for (Index i = 0; i < n; ++i) {
    RatMatrix a = r.rho01_of(X.mu.col(i));
    for (Index k = 0; k < w; ++k)
      for (Index l = 0; l < w; ++l) {
        C1(i, n + k, n + l) = a(l, k);
        C1(n + k, i, n + l) = -a(l, k);
      }
  }
  // e0 = h (+) V with omega0
  std::vector<Rat> c0(N0 * N0 * N0, Rat(0));
  auto C0 = [&](Index i, Index j, Index k) -> Rat& { return c0[(i * N0 + j) * N0 + k]; };
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) {
      RatVector b = X.h.bracket_basis(i, j);
      RatVector t = -omega0_of(d, unit(m, i), unit(m, j));
      for (Index k = 0; k < m; ++k) C0(i, j, k) = b(k);
      for (Index k = 0; k < v; ++k) C0(i, j, m + k) = t(k);
    }
  for (Index i = 0; i < m; ++i)
    for (Index k = 0; k < v; ++k)
      for (Index l = 0; l < v; ++l) {
        C0(i, m + k, m + l) = r.rho00[i](l, k);
        C0(m + k, i, m + l) = -r.rho00[i](l, k);
      }

  CrossedModule E;
  E.g = LieAlgebra(N1, std::move(c1));
  E.h = LieAlgebra(N0, std::move(c0));
  E.mu = RatMatrix::Zero(N0, N1);
  E.mu.topLeftCorner(m, n) = X.mu;
  E.mu.bottomLeftCorner(v, n) = d.varphi;
  E.mu.bottomRightCorner(v, w) = r.phi();
  // L_{(y,v)}(x,w) = (L_y x, rho01(y) w - rho1(x) v - alpha(y;x))
  for (Index j = 0; j < m; ++j) {
    RatMatrix A = RatMatrix::Zero(N1, N1);
    A.topLeftCorner(n, n) = X.action[j];
    A.bottomLeftCorner(w, n) = -d.alpha[j];
    A.bottomRightCorner(w, w) = r.rho01[j];
    E.action.push_back(A);
  }
  for (Index k = 0; k < v; ++k) {
    RatMatrix A = RatMatrix::Zero(N1, N1);
    for (Index i = 0; i < n; ++i) A.block(n, i, w, 1) = -r.rho1[i].col(k);
    E.action.push_back(A);
  }

  SplitExtension se;
  TwoExtension& e = se.ext;
  e.base = X;
  e.kernel = r.target;
  e.total = std::move(E);
  e.j1 = RatMatrix::Zero(N1, w);
  e.j1.bottomRows(w) = RatMatrix::Identity(w, w);
  e.pi1 = RatMatrix::Zero(n, N1);
  e.pi1.leftCols(n) = RatMatrix::Identity(n, n);
  e.j0 = RatMatrix::Zero(N0, v);
  e.j0.bottomRows(v) = RatMatrix::Identity(v, v);
  e.pi0 = RatMatrix::Zero(m, N0);
  e.pi0.leftCols(m) = RatMatrix::Identity(m, m);
  se.sigma1 = e.pi1.transpose();
  se.sigma0 = e.pi0.transpose();
  return se;
}

SplitExtension build_extension(const ExtensionData& d) {
  Report rep = cocycle_check(d);
  if (!rep.empty()) throw InvalidCocycle("data does not satisfy the cocycle equations", std::move(rep));
  return assemble_extension(d);
}

SplitExtension resplit(const SplitExtension& e, const RatMatrix& tau1, const RatMatrix& tau0) {
  SplitExtension out = e;
  out.sigma1 += e.ext.j1 * tau1;
  out.sigma0 += e.ext.j0 * tau0;
  return out;
}

Report check_crossed_module_map(const CrossedModule& A, const CrossedModule& B, const RatMatrix& psi1,
                                const RatMatrix& psi0) {
  Report out;
  if (psi1.rows() != B.g.dim() || psi1.cols() != A.g.dim() || psi0.rows() != B.h.dim() || psi0.cols() != A.h.dim()) {
    out.push_back({"shape", {}, "map has the wrong shape"});
    return out;
  }
  if (!is_homomorphism(A.g, B.g, psi1)) out.push_back({"hom1", {}, ""});
  if (!is_homomorphism(A.h, B.h, psi0)) out.push_back({"hom0", {}, ""});
  if (!same(RatMatrix(B.mu * psi1), RatMatrix(psi0 * A.mu))) out.push_back({"mu-square", {}, ""});
  for (Index k = 0; k < A.h.dim(); ++k)
    if (!same(RatMatrix(psi1 * A.action[k]), RatMatrix(B.act(psi0.col(k)) * psi1)))
      out.push_back({"action", {k}, ""});
  return out;
}

std::optional<Equivalence> equivalence(const ExtensionData& d1, const ExtensionData& d2) {
  if (!(d1.rep == d2.rep)) throw InputError("equivalence needs data over the same representation");
  const TwoRep& r = d1.rep;
  const CrossedModule& X = r.source;
  const Index n = r.g_dim(), m = r.h_dim(), w = r.w_dim(), v = r.v_dim();
  const Index unknowns = v * m + w * n;
  // image of (lambda0, lambda1) in the (omega0, alpha, varphi) parameter space
  auto image = [&](const RatMatrix& l0, const RatMatrix& l1) {
    ExtensionData e = zero_data(r);
    TupleIndex P(m, 2);
    for (Index p = 0; p < P.size(); ++p) {
      auto t = P.tuple(p);
      const RatVector y0 = unit(m, t[0]), y1 = unit(m, t[1]);
      e.omega0.col(p) = r.rho00_of(y0) * (l0 * y1) - r.rho00_of(y1) * (l0 * y0) - l0 * X.h.bracket(y0, y1);
    }
    for (Index j = 0; j < m; ++j)
      for (Index i = 0; i < n; ++i) {
        const RatVector y = unit(m, j), x = unit(n, i);
        e.alpha[j].col(i) = r.rho01_of(y) * (l1 * x) - l1 * (X.action[j] * x) - r.rho1_of(x) * (l0 * y);
      }
    e.varphi = l0 * X.mu - r.phi() * l1;
    return data_vector(e);
  };
  RatMatrix A(data_dim(r), unknowns);
  for (Index u = 0; u < unknowns; ++u) {
    RatVector z = unit(unknowns, u);
    RatMatrix l0 = z.head(v * m).reshaped(v, m), l1 = z.tail(w * n).reshaped(w, n);
    A.col(u) = image(l0, l1);
  }
  const RatVector diff = data_vector(d2) - data_vector(d1);
  auto sol = solve(A, diff);
  if (!sol) return std::nullopt;
  Equivalence eq{sol->head(v * m).reshaped(v, m), sol->tail(w * n).reshaped(w, n)};
  if (image(eq.lambda0, eq.lambda1) != diff) throw std::logic_error("equivalence witness fails substitution");
  SplitExtension e1 = assemble_extension(d1), e2 = assemble_extension(d2);
  RatMatrix psi1 = RatMatrix::Identity(n + w, n + w), psi0 = RatMatrix::Identity(m + v, m + v);
  psi1.bottomLeftCorner(w, n) = eq.lambda1;
  psi0.bottomLeftCorner(v, m) = eq.lambda0;
  if (!check_crossed_module_map(e1.ext.total, e2.ext.total, psi1, psi0).empty())
    throw std::logic_error("equivalence witness does not induce a map of extensions");
  return eq;
}

namespace detail {

RatVector embed_with_signs(const CochainComplex& cx, const ExtensionData& d, const std::array<int, 4>& s) {
  const Index n = cx.g_dim(), m = d.rep.h_dim();
  TriCochain w0 = zero_cochain(cx, {0, 2, 0});
  TriCochain ph = zero_cochain(cx, {1, 1, 0});
  TriCochain al = zero_cochain(cx, {0, 1, 1});
  TriCochain w1 = zero_cochain(cx, {0, 0, 2});
  const std::vector<Index> none;
  TupleIndex Ph(m, 2), Pg(n, 2);
  for (Index p = 0; p < Ph.size(); ++p) set_value(cx, w0, Ph.tuple(p), none, Rat(s[0]) * RatVector(d.omega0.col(p)));
  for (Index i = 0; i < n; ++i) set_value(cx, ph, std::vector<Index>{i}, none, Rat(s[1]) * RatVector(d.varphi.col(i)));
  for (Index j = 0; j < m; ++j)
    for (Index i = 0; i < n; ++i)
      set_value(cx, al, std::vector<Index>{j}, std::vector<Index>{i}, Rat(s[2]) * RatVector(d.alpha[j].col(i)));
  const RatMatrix o1 = omega1_tensor(d);
  for (Index p = 0; p < Pg.size(); ++p) set_value(cx, w1, none, Pg.tuple(p), Rat(s[3]) * RatVector(o1.col(p)));
  return assemble_total(cx, 2, {w0, ph, al, w1}).coeffs;
}

}  // namespace detail

namespace {
constexpr std::array<int, 4> kEmbedSigns{1, 1, 1, 1};
}

RatVector embed_cocycle(const CochainComplex& cx, const ExtensionData& d) {
  return detail::embed_with_signs(cx, d, kEmbedSigns);
}

RatMatrix embedding_matrix(const CochainComplex& cx) {
  const TwoRep& r = cx.rep();
  const Index k = data_dim(r);
  RatMatrix E(cx.total_dim(2), k);
  for (Index u = 0; u < k; ++u) E.col(u) = embed_cocycle(cx, data_from_vector(r, unit(k, u)));
  return E;
}

ExtensionData normalize_cocycle(const CochainComplex& cx, const RatVector& c) {
  const TwoRep& r = cx.rep();
  const Index n = r.g_dim();
  if (c.size() != cx.total_dim(2)) throw InputError("not a degree-2 total cochain");
  // coordinates that must be cleared
  std::vector<Index> rows;
  for (const Degree& b : CochainComplex::blocks(2)) {
    const Index off = cx.block_offset(b), dim = cx.space_dim(b);
    if ((b.p == 1 && b.q == 0 && b.r == 1) || (b.p == 2 && b.q == 0 && b.r == 0)) {
      for (Index i = 0; i < dim; ++i) rows.push_back(off + i);
    } else if (b.p == 1 && b.q == 1 && b.r == 0) {
      // xi rank = basis index of g_1; the h-block starts after n
      for (Index xi = n; xi < cx.nerve_dim(1); ++xi)
        for (Index k = 0; k < r.v_dim(); ++k) rows.push_back(off + xi * r.v_dim() + k);
    }
  }
  const RatMatrix D = RatMatrix(cx.nabla_matrix(1));
  RatMatrix A(static_cast<Index>(rows.size()), D.cols());
  RatVector rhs(static_cast<Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    A.row(static_cast<Index>(i)) = D.row(rows[i]);
    rhs(static_cast<Index>(i)) = c(rows[i]);
  }
  auto b = solve(A, rhs);
  if (!b) throw DomainError("cocycle cannot be normalised");
  const RatVector cn = c - D * *b;
  // read the parameters back through the embedding
  auto sol = solve(embedding_matrix(cx), cn);
  if (!sol) throw InvalidCocycle("normalised cocycle is not of the form (omega0, alpha, varphi)", {});
  return data_from_vector(r, *sol);
}

RatVector class_of(const CochainComplex& cx, const CohomologyGroup& H2, const ExtensionData& d) {
  Report rep = cocycle_check(d);
  if (!rep.empty()) throw InvalidCocycle("data does not satisfy the cocycle equations", std::move(rep));
  const RatVector c = embed_cocycle(cx, d);
  const SparseRatMatrix D2 = cx.nabla_matrix(2);
  if (!is_zero(RatMatrix(D2 * c))) throw std::logic_error("embedded cocycle is not closed");
  const Subspace img = column_space(cx.nabla_matrix(1));
  RatMatrix M(c.size(), H2.dim + img.dim());
  M << H2.representatives, img.basis;
  auto sol = solve(M, c);
  if (!sol) throw std::logic_error("cocycle is not in the span of representatives and coboundaries");
  RatVector cls = sol->head(H2.dim);
  const bool zero = is_zero(RatMatrix(cls));
  if (zero != equivalence(d, zero_data(d.rep)).has_value())
    throw std::logic_error("class and equivalence disagree");
  return cls;
}

RatMatrix cocycle_space(const CochainComplex& cx) {
  const RatMatrix E = embedding_matrix(cx);
  SparseRatMatrix Es = E.sparseView();
  return kernel_basis(SparseRatMatrix(cx.nabla_matrix(2) * Es)).basis;
}

ExtensionData random_cocycle(const CochainComplex& cx, const RatMatrix& space, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  RatVector v = RatVector::Zero(space.rows());
  for (Index j = 0; j < space.cols(); ++j) v += Rat(coef(rng)) * space.col(j);
  return data_from_vector(cx.rep(), v);
}

Report triv_conditions(const TrivExtensionData& t) {
  const CrossedModule& X = t.X;
  const Index n = X.g.dim(), m = X.h.dim();
  Report out;
  if (t.omega.size() != binomial(m, 2) || t.varphi.size() != n + m) {
    out.push_back({"shape", {}, "omega or varphi has the wrong length"});
    return out;
  }
  ExtensionData tmp;
  tmp.rep.target = TwoVect{0, 1, RatMatrix(1, 0)};
  tmp.rep.source = X;
  tmp.omega0 = t.omega.transpose();
  auto om = [&](const RatVector& a, const RatVector& b) { return omega0_of(tmp, a, b)(0); };
  for (Index a = 0; a < m; ++a)
    for (Index b = a + 1; b < m; ++b)
      for (Index c = b + 1; c < m; ++c) {
        const RatVector y0 = unit(m, a), y1 = unit(m, b), y2 = unit(m, c);
        Rat s = om(X.h.bracket(y0, y1), y2) + om(X.h.bracket(y1, y2), y0) + om(X.h.bracket(y2, y0), y1);
        if (s != 0) out.push_back({"1", {a, b, c}, "omega is not closed"});
      }
  for (Index j = 0; j < m; ++j)
    if (t.varphi(n + j) != 0) out.push_back({"2", {j}, "varphi does not vanish on h"});
  for (Index j = 0; j < m; ++j)
    for (Index i = 0; i < n; ++i) {
      Rat lhs = t.varphi.head(n).dot(X.action[j].col(i));
      Rat rhs = -om(unit(m, j), X.mu.col(i));
      if (lhs != rhs) out.push_back({"3", {j, i}, "varphi(L_y x) != -omega(y, mu x)"});
    }
  return out;
}

CrossedModule triv_central_extension(const TrivExtensionData& t) {
  Report rep = triv_conditions(t);
  if (!rep.empty()) throw InvalidCocycle("trivial-coefficient cocycle conditions fail", std::move(rep));
  const CrossedModule& X = t.X;
  const Index n = X.g.dim(), m = X.h.dim();
  CrossedModule Y;
  Y.g = X.g;
  Y.h = LieAlgebra(m + 1);
  TupleIndex P(m, 2);
  for (Index p = 0; p < P.size(); ++p) {
    auto tt = P.tuple(p);
    RatVector b(m + 1);
    b << X.h.bracket_basis(tt[0], tt[1]), -t.omega(p);
    Y.h.set_bracket(tt[0], tt[1], b);
  }
  Y.mu = RatMatrix::Zero(m + 1, n);
  Y.mu.topRows(m) = X.mu;
  Y.mu.row(m) = t.varphi.head(n).transpose();
  Y.action = X.action;
  Y.action.push_back(RatMatrix::Zero(n, n));
  return Y;
}

TrivExtensionData triv_shift(const TrivExtensionData& t, const RatVector& phihat) {
  const Index m = t.X.h.dim();
  if (phihat.size() != m) throw InputError("phihat must be a form on h");
  // degree-1 layout: h^* then the constant at p = 1
  RatVector src = RatVector::Zero(m + 1);
  src.head(m) = phihat;
  const RatVector dphi = RatMatrix(trivial_total_differential(t.X, 1)) * src;
  TrivExtensionData out = t;
  const Index k = binomial(m, 2);
  out.omega -= dphi.head(k);
  out.varphi -= dphi.segment(k, t.varphi.size());
  return out;
}

}  // namespace lie2
