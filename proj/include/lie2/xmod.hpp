#pragma once

#include "lie2/liealg.hpp"

namespace lie2 {

struct ComposabilityError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Crossed module mu: g -> h with h acting on g; action[j] is the matrix of L_{e_j} on g.
struct CrossedModule {
  LieAlgebra g;
  LieAlgebra h;
  RatMatrix mu;                     // dim h x dim g
  std::vector<RatMatrix> action;    // one dim g x dim g matrix per h basis element

  RatMatrix act(const RatVector& y) const;
  LinRep action_rep() const { return {h, g.dim(), action}; }
};

bool operator==(const CrossedModule& a, const CrossedModule& b);

/// Crossed module 0 -> h.
CrossedModule lie_algebra_as_xmod(const LieAlgebra& h);

/// id: L -> L with the adjoint action.
CrossedModule identity_xmod(const LieAlgebra& L);

Report check_crossed_module(const CrossedModule& X);

/// Lie algebra on g (+) h, g-coordinates first.
LieAlgebra semidirect_sum(const CrossedModule& X);

/// Source, target, inverse and unit of the groupoid g (+) h over h, plus composition.
struct StructuralMaps {
  RatMatrix s, t, i, u;
  RatMatrix mu;
  /// Composite of a' after a; requires s(a') = t(a).
  RatVector compose(const RatVector& a_prime, const RatVector& a) const;
};

StructuralMaps structural_maps(const CrossedModule& X);

/// The crossed module ker s -> h of a Lie groupoid structure on an arrow algebra.
CrossedModule from_groupoid(const LieAlgebra& arrows, const RatMatrix& s, const RatMatrix& t, const RatMatrix& u);

/// Composable p-strings, coordinates (x^0, ..., x^{p-1}; y).
struct NerveSpace {
  Index p = 0;
  Index g_dim = 0, h_dim = 0;
  LieAlgebra algebra;

  Index dim() const { return p * g_dim + h_dim; }
};

/// Embedding g_p -> (g (+) h)^p, the i-th arrow being (x^i, y + sum_{k>i} mu x^k).
RatMatrix nerve_embedding(const CrossedModule& X, Index p);
NerveSpace nerve_space(const CrossedModule& X, Index p);
/// Face map g_{p+1} -> g_p, 0 <= k <= p+1.
RatMatrix face_map(const CrossedModule& X, Index p, Index k);
/// t_p(x; y) = y + sum_j mu x^j.
RatMatrix final_target(const CrossedModule& X, Index p);

/// h / I with I an ideal; section columns are the chosen complement basis in h.
struct QuotientAlgebra {
  LieAlgebra algebra;
  RatMatrix section;     // dim h x dim quotient
  RatMatrix projection;  // dim quotient x dim h
};

QuotientAlgebra quotient_algebra(const LieAlgebra& h, const Subspace& ideal);

struct GroupoidInvariants {
  Index orbit_space_dim = 0;
  Subspace isotropy;
  LinRep quotient_rep;
};

GroupoidInvariants groupoid_invariants(const CrossedModule& X);

/// Crossed module V (+) I -> h from an ideal I and a representation of h/I on V.
CrossedModule from_tuple(const LieAlgebra& h, const Subspace& ideal, Index v_dim, const LinRep& rep);

}  // namespace lie2
