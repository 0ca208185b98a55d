#include "lie2/cohom.hpp"

namespace lie2 {

CohomologyGroup cohomology_of(const SparseRatMatrix& prev, const SparseRatMatrix& next, Index n) {
  if (prev.rows() != next.cols()) throw InputError("differentials do not compose");
  Subspace ker = kernel_basis(next);
  Subspace img = column_space(prev);
  CohomologyGroup H;
  H.degree = n;
  H.dim = quotient_dim(ker, img);
  H.representatives = complement_in(ker, img);
  return H;
}

CohomologyGroup cohomology(const CochainComplex& cx, Index n) {
  SparseRatMatrix prev = n == 0 ? SparseRatMatrix(cx.total_dim(0), 0) : cx.nabla_matrix(n - 1);
  return cohomology_of(prev, cx.nabla_matrix(n), n);
}

CohomologyGroup trivial_total_cohomology(const CrossedModule& X, Index n) {
  SparseRatMatrix next = trivial_total_differential(X, n);
  SparseRatMatrix prev = n == 0 ? SparseRatMatrix(next.cols(), 0) : trivial_total_differential(X, n - 1);
  return cohomology_of(prev, next, n);
}

Subspace invariants_subspace(const TwoRep& r) {
  const Index w = r.w_dim(), v = r.v_dim();
  LinRep bar = bar_rep(r);
  RatMatrix stacked(bar.mats.size() * (w + v), v);
  for (std::size_t a = 0; a < bar.mats.size(); ++a)
    stacked.middleRows(a * (w + v), w + v) = bar.mats[a].rightCols(v);
  return kernel_basis(stacked);
}

std::pair<RatMatrix, RatMatrix> derivation_maps(const TwoRep& r, const RatVector& coords) {
  const Index n = r.g_dim(), m = r.h_dim(), w = r.w_dim(), v = r.v_dim();
  RatMatrix l1 = coords.head(w * n).reshaped(w, n);
  RatMatrix l0 = coords.tail(v * m).reshaped(v, m);
  return {l1, l0};
}

// Linear conditions on (lambda1, lambda0): phi lambda1 = lambda0 mu, and
// lambda_bar([a, b]) = bar(a) lambda_bar(b) - bar(b) lambda_bar(a) on basis pairs of g (+) h.
Derivations derivations(const TwoRep& r) {
  const Index n = r.g_dim(), m = r.h_dim(), w = r.w_dim(), v = r.v_dim();
  const Index unknowns = w * n + v * m;
  const RatMatrix& phi = r.phi();
  const RatMatrix& mu = r.source.mu;
  // lambda_bar as a linear map of the unknowns: entry (row of W(+)V, basis a of g(+)h) -> unknown
  auto lam_index = [&](Index row, Index a) -> Index {
    if (a < n) return row < w ? row + w * a : -1;
    return row >= w ? w * n + (row - w) + v * (a - n) : -1;
  };
  std::vector<std::vector<std::pair<Index, Rat>>> eqs;
  for (Index i = 0; i < v; ++i)
    for (Index x = 0; x < n; ++x) {
      std::vector<std::pair<Index, Rat>> e;
      for (Index k = 0; k < w; ++k)
        if (phi(i, k) != 0) e.emplace_back(k + w * x, phi(i, k));
      for (Index y = 0; y < m; ++y)
        if (mu(y, x) != 0) e.emplace_back(w * n + i + v * y, -mu(y, x));
      eqs.push_back(std::move(e));
    }
  LieAlgebra S = semidirect_sum(r.source);
  LinRep bar = bar_rep(r);
  const Index N = n + m, D = w + v;
  for (Index a = 0; a < N; ++a)
    for (Index b = a + 1; b < N; ++b) {
      RatVector ab = S.bracket_basis(a, b);
      for (Index row = 0; row < D; ++row) {
        std::vector<std::pair<Index, Rat>> e;
        for (Index c = 0; c < N; ++c)
          if (ab(c) != 0 && lam_index(row, c) >= 0) e.emplace_back(lam_index(row, c), ab(c));
        for (Index k = 0; k < D; ++k) {
          if (bar.mats[a](row, k) != 0 && lam_index(k, b) >= 0) e.emplace_back(lam_index(k, b), -bar.mats[a](row, k));
          if (bar.mats[b](row, k) != 0 && lam_index(k, a) >= 0) e.emplace_back(lam_index(k, a), bar.mats[b](row, k));
        }
        eqs.push_back(std::move(e));
      }
    }
  std::vector<Triplet> trips;
  for (std::size_t i = 0; i < eqs.size(); ++i)
    for (const auto& [c, val] : eqs[i]) trips.emplace_back(static_cast<Index>(i), c, val);
  SparseRatMatrix A(static_cast<Index>(eqs.size()), unknowns);
  A.setFromTriplets(trips.begin(), trips.end());

  Derivations out;
  out.der = kernel_basis(A);
  RatMatrix inner(unknowns, v);
  for (Index k = 0; k < v; ++k) {
    RatMatrix l1(w, n), l0(v, m);
    for (Index x = 0; x < n; ++x) l1.col(x) = r.rho1[x].col(k);
    for (Index y = 0; y < m; ++y) l0.col(y) = r.rho00[y].col(k);
    inner.col(k) << l1.reshaped(), l0.reshaped();
  }
  out.inn = column_space(inner);
  out.out_dim = quotient_dim(out.der, out.inn);
  return out;
}

}  // namespace lie2
