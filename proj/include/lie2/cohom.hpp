#pragma once

#include "lie2/cochain.hpp"

namespace lie2 {

/// H^n = ker d_n / im d_{n-1}; representatives complete the image basis inside the kernel.
struct CohomologyGroup {
  Index degree = 0;
  Index dim = 0;
  RatMatrix representatives;  // columns are cocycles in C^n
};

/// prev: C^{n-1} -> C^n, next: C^n -> C^{n+1}.
CohomologyGroup cohomology_of(const SparseRatMatrix& prev, const SparseRatMatrix& next, Index n);

CohomologyGroup cohomology(const CochainComplex& cx, Index n);
CohomologyGroup trivial_total_cohomology(const CrossedModule& X, Index n);

/// V^{g1}: vectors v with bar_rep(a)(0, v) = 0 for every a in g (+) h.
Subspace invariants_subspace(const TwoRep& r);

/**
 * Derivation pairs (lambda1, lambda0) in coordinates [vec lambda1; vec lambda0],
 * both column-major (column i of lambda1 is the image of the i-th basis vector of g).
 */
struct Derivations {
  Subspace der;
  Subspace inn;
  Index out_dim = 0;
};

Derivations derivations(const TwoRep& r);

/// Splits a derivation coordinate vector into (lambda1: W x dim g, lambda0: V x dim h).
std::pair<RatMatrix, RatMatrix> derivation_maps(const TwoRep& r, const RatVector& coords);

}  // namespace lie2
