#pragma once

#include "lie2/ratmat.hpp"
#include "lie2/report.hpp"

#include <string>
#include <vector>

namespace lie2 {

/// Lie algebra over Q given by structure constants [e_i, e_j] = sum_k c(i,j,k) e_k.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Abelian algebra of the given dimension.
  explicit LieAlgebra(Index dim, std::vector<std::string> names = {});
  /// Raw constants, c[(i * dim + j) * dim + k]; not checked.
  LieAlgebra(Index dim, std::vector<Rat> constants, std::vector<std::string> names = {});

  Index dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Rat& c(Index i, Index j, Index k) const { return c_[(i * dim_ + j) * dim_ + k]; }

  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(Index i, Index j, const RatVector& v);
  /// Sets a single constant without touching the mirrored one.
  void set_constant(Index i, Index j, Index k, const Rat& value) { c_[(i * dim_ + j) * dim_ + k] = value; }

  RatVector bracket(const RatVector& u, const RatVector& v) const;
  RatVector bracket_basis(Index i, Index j) const;
  /// Matrix of ad(e_i): column j is [e_i, e_j].
  RatMatrix ad(Index i) const;
  RatMatrix ad(const RatVector& u) const;

  bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && c_ == o.c_; }

 private:
  Index dim_ = 0;
  std::vector<Rat> c_;
  std::vector<std::string> names_;
};

Report check_lie_algebra(const LieAlgebra& L);

/// m is dim(dst) x dim(src).
bool is_homomorphism(const LieAlgebra& src, const LieAlgebra& dst, const RatMatrix& m);

/// Bracket in new coordinates: the algebra spanned by the columns of `basis`, assumed closed.
LieAlgebra restrict_to(const LieAlgebra& L, const RatMatrix& basis);

/// Linear representation: mats[i] is the action of e_i on a space of dimension space_dim.
struct LinRep {
  LieAlgebra algebra;
  Index space_dim = 0;
  std::vector<RatMatrix> mats;

  RatMatrix act(const RatVector& u) const;
};

LinRep trivial_rep(const LieAlgebra& L, Index space_dim);
LinRep adjoint(const LieAlgebra& L);
Report check_rep(const LinRep& rep);

/// CE differential on alternating q-forms of L with coefficients: action[i] acts on a space of dim coeff_dim.
SparseRatMatrix ce_differential(const LieAlgebra& L, const std::vector<RatMatrix>& action, Index coeff_dim, Index q);

RatMatrix ce_matrix(const LinRep& rep, Index q);

/// Checks that pulling back along m commutes with the CE differentials (trivial coefficients) in degrees 0 and 1.
bool dga_pullback_check(const LieAlgebra& src, const LieAlgebra& dst, const RatMatrix& m);

/// Lie algebra on L (+) M with [(a,m),(b,n)] = ([a,b], rho(a)n - rho(b)m).
LieAlgebra semidirect_with_module(const LinRep& rep);

}  // namespace lie2
