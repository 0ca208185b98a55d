#pragma once

#include "lie2/cohom.hpp"

#include <optional>
#include <random>

namespace lie2 {

struct InvalidCocycle : DomainError {
  InvalidCocycle(const std::string& what, Report r) : DomainError(what), report(std::move(r)) {}
  Report report;
};

/// Residues of the six cocycle equations, families "i" ... "vi".
Report cocycle_check(const ExtensionData& d);
/// The same residues concatenated in a fixed order; linear in the data.
RatVector cocycle_residue_vector(const ExtensionData& d);

// Parameter vector of (omega0, alpha, varphi): omega0 then alpha(e_0; .) ... alpha(e_{m-1}; .) then varphi,
// every block column-major.
Index data_dim(const TwoRep& r);
RatVector data_vector(const ExtensionData& d);
ExtensionData data_from_vector(const TwoRep& r, const RatVector& v);

/// The extension g (+) W -> h (+) V twisted by d, with the coordinate splitting; nothing is checked.
SplitExtension assemble_extension(const ExtensionData& d);
/// As above, after cocycle_check; throws InvalidCocycle.
SplitExtension build_extension(const ExtensionData& d);

/// sigma' = sigma + j tau at both levels (tau1: W x dim g, tau0: V x dim h).
SplitExtension resplit(const SplitExtension& e, const RatMatrix& tau1, const RatMatrix& tau0);

/// Witness of an equivalence: psi_k(z, a) = (z, a + lambda_k z).
struct Equivalence {
  RatMatrix lambda0;  // V x dim h
  RatMatrix lambda1;  // W x dim g
};

/// Checks that (psi1, psi0) is a map of crossed modules A -> B.
Report check_crossed_module_map(const CrossedModule& A, const CrossedModule& B, const RatMatrix& psi1,
                                const RatMatrix& psi0);

/// Solves for (lambda0, lambda1); a returned witness has been verified on the assembled extensions.
std::optional<Equivalence> equivalence(const ExtensionData& d1, const ExtensionData& d2);

/// Degree-2 total cochain carrying d: omega0 at (0,2,0), varphi at (1,1,0), alpha at (0,1,1), omega1 at (0,0,2).
RatVector embed_cocycle(const CochainComplex& cx, const ExtensionData& d);
/// Matrix of embed_cocycle on the parameter vector.
RatMatrix embedding_matrix(const CochainComplex& cx);
/// Subtracts a coboundary so that the (1,0,1), (2,0,0) and h-part of (1,1,0) vanish, and reads off the data.
ExtensionData normalize_cocycle(const CochainComplex& cx, const RatVector& c);

/// Coordinates of the class of d in the representative basis of H.
RatVector class_of(const CochainComplex& cx, const CohomologyGroup& H2, const ExtensionData& d);

/// Basis (columns, parameter coordinates) of the space of valid cocycle data.
RatMatrix cocycle_space(const CochainComplex& cx);
/// Random element of the cocycle space with small integer coefficients.
ExtensionData random_cocycle(const CochainComplex& cx, const RatMatrix& space, std::mt19937_64& rng);

/// Trivial coefficients: omega on pairs of h (lex order), varphi on g_1 = g (+) h.
struct TrivExtensionData {
  CrossedModule X;
  RatVector omega;
  RatVector varphi;
};

Report triv_conditions(const TrivExtensionData& t);
/// g -> h (+) Q with mu(x) = (mu x, varphi(x, 0)) and bracket ([y0, y1], -omega(y0, y1)).
CrossedModule triv_central_extension(const TrivExtensionData& t);
/// (omega, varphi) - d(phihat) for phihat in h^*.
TrivExtensionData triv_shift(const TrivExtensionData& t, const RatVector& phihat);

}  // namespace lie2
