#pragma once

#include "lie2/xmod.hpp"

namespace lie2 {

/// 2-term complex phi: W -> V.
struct TwoVect {
  Index w_dim = 0, v_dim = 0;
  RatMatrix phi;  // v_dim x w_dim
};

inline bool operator==(const TwoVect& a, const TwoVect& b) {
  return a.w_dim == b.w_dim && a.v_dim == b.v_dim && same(a.phi, b.phi);
}

/// gl(phi): objects (F, f) with phi F = f phi, arrows Hom(V, W).
struct GlPhi {
  TwoVect base;
  Subspace objects;  // ambient: F row-major, then f row-major

  Index arrows_dim() const { return base.v_dim * base.w_dim; }
  Index objects_dim() const { return objects.dim(); }
  std::pair<RatMatrix, RatMatrix> object(Index i) const;
  RatVector flatten(const RatMatrix& F, const RatMatrix& f) const;
  /// Coordinates in the objects basis; throws DomainError outside gl(phi)_0.
  RatVector object_coords(const RatMatrix& F, const RatMatrix& f) const;
  bool contains(const RatMatrix& F, const RatMatrix& f) const;
  RatMatrix arrow(Index i) const;  // elementary W x V matrix, row-major order
};

GlPhi glphi(const TwoVect& base);
std::pair<RatMatrix, RatMatrix> delta_map(const GlPhi& G, const RatMatrix& A);
RatMatrix bracket_phi(const GlPhi& G, const RatMatrix& A1, const RatMatrix& A2);
RatMatrix action_phi(const GlPhi& G, const RatMatrix& F, const RatMatrix& f, const RatMatrix& A);
CrossedModule glphi_as_crossed_module(const GlPhi& G);

/// Natural transformation A from (F, f) to (F + A phi, f + phi A).
struct GlArrow {
  RatMatrix A, F, f;
};

/// Horizontal composite of `first` followed by `second`: (Bf + B phi A + GA; GF, gf).
GlArrow horizontal_composition(const GlPhi& G, const GlArrow& first, const GlArrow& second);

}  // namespace lie2
