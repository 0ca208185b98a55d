#pragma once

#include "lie2/twovec.hpp"

namespace lie2 {

/// 2-representation of X on phi: W -> V given by rho00 (h on V), rho01 (h on W), rho1 (g -> Hom(V, W)).
struct TwoRep {
  CrossedModule source;
  TwoVect target;
  std::vector<RatMatrix> rho00;  // per h basis element, V x V
  std::vector<RatMatrix> rho01;  // per h basis element, W x W
  std::vector<RatMatrix> rho1;   // per g basis element, W x V

  Index g_dim() const { return source.g.dim(); }
  Index h_dim() const { return source.h.dim(); }
  Index w_dim() const { return target.w_dim; }
  Index v_dim() const { return target.v_dim; }
  const RatMatrix& phi() const { return target.phi; }

  RatMatrix rho00_of(const RatVector& y) const;
  RatMatrix rho01_of(const RatVector& y) const;
  RatMatrix rho1_of(const RatVector& x) const;
};

bool operator==(const TwoRep& a, const TwoRep& b);

TwoRep trivial_two_rep(const CrossedModule& X, const TwoVect& target);
Report check_two_rep(const TwoRep& r);

/// Honest representation of g (+) h on W (+) V.
LinRep bar_rep(const TwoRep& r);
/// Crossed module g (+) W -> h (+) V.
CrossedModule semidirect_product(const TwoRep& r);
TwoRep adjoint_rep(const CrossedModule& X);
/// gl(phi) acting on phi itself.
TwoRep tautological_rep(const TwoVect& t);
/// Representation of h on alternating rr-forms on g with values in W (index: tuple rank * W + w).
LinRep rep_r(const TwoRep& r, Index rr);

/// The same data as a map into gl(phi): arrows (Hom(V,W) coords per g basis), objects (coords per h basis).
std::pair<RatMatrix, RatMatrix> to_glphi_coordinates(const TwoRep& r, const GlPhi& G);

/**
 * Extension 0 -> (W -> V) -> (e1 -> e0) -> (g -> h) -> 0 of crossed modules.
 * j maps the kernel in, pi projects onto the base.
 */
struct TwoExtension {
  CrossedModule base;
  TwoVect kernel;
  CrossedModule total;
  RatMatrix j1, pi1;  // dim e1 x W, dim g x dim e1
  RatMatrix j0, pi0;  // dim e0 x V, dim h x dim e0
};

struct SplitExtension {
  TwoExtension ext;
  RatMatrix sigma1;  // dim e1 x dim g
  RatMatrix sigma0;  // dim e0 x dim h
};

Report check_extension(const SplitExtension& e);

/// Twist data of an extension relative to a 2-representation.
struct ExtensionData {
  TwoRep rep;
  RatMatrix omega0;               // V x C(dim h, 2), columns are increasing pairs
  std::vector<RatMatrix> alpha;   // per h basis element, W x dim g; alpha(y; x)
  RatMatrix varphi;               // V x dim g
};

ExtensionData zero_data(const TwoRep& r);
/// alpha(y; x)
RatVector alpha_of(const ExtensionData& d, const RatVector& y, const RatVector& x);
/// omega0 on arbitrary arguments, alternating extension of the stored pairs.
RatVector omega0_of(const ExtensionData& d, const RatVector& y0, const RatVector& y1);
/// rho1(x1) varphi(x0) + alpha(mu x0; x1), without assuming skew symmetry.
RatVector omega1_of(const ExtensionData& d, const RatVector& x0, const RatVector& x1);
/// omega1 on increasing pairs, W x C(dim g, 2).
RatMatrix omega1_tensor(const ExtensionData& d);

struct InducedData {
  ExtensionData data;
  RatMatrix omega1;  // W x C(dim g, 2)
};

InducedData rep_from_extension(const SplitExtension& e);

}  // namespace lie2
