#pragma once

#include "lie2/rep2.hpp"
#include "lie2/tuples.hpp"

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace lie2 {

struct Degree {
  Index p = 0, q = 0, r = 0;
  Index total() const { return p + q + r; }
  auto operator<=>(const Degree&) const = default;
};

std::string to_string(const Degree& d);

/**
 * The triple complex C^{p,q}_r of a 2-representation and its total differential
 * nabla = delta^(r) + (-1)^q delta_(1) + (-1)^{q+r} partial + sum_k s_k Delta_k,
 * s_k = (-1)^{r + (k-1)q + k(k-1)/2}; see SIGNS.md.
 *
 * Coordinates on C^{p,q}_r: ((xi_rank * nZ) + z_rank) * value_dim + component, with xi an
 * increasing q-tuple over the basis of g_p and z an increasing r-tuple over g.
 * Nerve data and block matrices are memoised; the object is safe to share across threads.
 */
class CochainComplex {
 public:
  struct Options {
    bool flip_difference = false;  // negates Delta_1 (regression fixture for the identity suite)
  };

  explicit CochainComplex(TwoRep rep) : CochainComplex(std::move(rep), Options{}) {}
  CochainComplex(TwoRep rep, Options opts);

  const TwoRep& rep() const { return rep_; }
  const Options& options() const { return opts_; }
  Index g_dim() const { return rep_.g_dim(); }
  Index nerve_dim(Index p) const { return p * rep_.g_dim() + rep_.h_dim(); }
  Index value_dim(Index r) const { return r == 0 ? rep_.v_dim() : rep_.w_dim(); }
  Index space_dim(const Degree& d) const;

  const TupleIndex& xi_index(Index p, Index q) const;
  const TupleIndex& z_index(Index r) const;
  const NerveSpace& nerve(Index p) const;
  const RatMatrix& face(Index p, Index k) const;  // g_{p+1} -> g_p

  // Unsigned block maps out of C^{p,q}_r.
  const SparseRatMatrix& delta_r(const Degree& src) const;   // -> (p, q+1, r)
  const SparseRatMatrix& delta_1(const Degree& src) const;   // -> (p, q, r+1)
  const SparseRatMatrix& partial(const Degree& src) const;   // -> (p+1, q, r)
  const SparseRatMatrix& difference(Index k, const Degree& src) const;  // -> (p+1, q+k, r-k)

  // Signs with which each family enters nabla, as functions of the source degree.
  static int sign_delta_r(const Degree&) { return 1; }
  static int sign_delta_1(const Degree& d) { return d.q % 2 == 0 ? 1 : -1; }
  static int sign_partial(const Degree& d) { return (d.q + d.r) % 2 == 0 ? 1 : -1; }
  int sign_difference(const Degree& d, Index k) const;

  /// Blocks of total degree n in lexicographic (p, q, r) order.
  static std::vector<Degree> blocks(Index n);
  Index total_dim(Index n) const;
  Index block_offset(const Degree& d) const;

  SparseRatMatrix nabla_matrix(Index n) const;

 private:
  using Key = std::tuple<int, Index, Index, Index, Index>;
  const SparseRatMatrix& cached(const Key& key, const std::function<SparseRatMatrix()>& build) const;
  const RatMatrix& coeff_action(Index p, Index r, Index i) const;

  SparseRatMatrix build_delta_r(const Degree& d) const;
  SparseRatMatrix build_delta_1(const Degree& d) const;
  SparseRatMatrix build_partial(const Degree& d) const;
  SparseRatMatrix build_difference(Index k, const Degree& d) const;

  TwoRep rep_;
  Options opts_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<Index, Index>, std::unique_ptr<TupleIndex>> tuples_;
  mutable std::map<Index, std::unique_ptr<NerveSpace>> nerves_;
  mutable std::map<std::pair<Index, Index>, std::unique_ptr<RatMatrix>> faces_;
  mutable std::map<Index, std::unique_ptr<LinRep>> coeff_reps_;
  mutable std::map<Key, std::unique_ptr<SparseRatMatrix>> blocks_;
};

/// Element of a single C^{p,q}_r in the coordinates above.
struct TriCochain {
  Degree degree;
  RatVector coeffs;
};

/// Element of C^n_tot; coeffs follow the block order of CochainComplex::blocks(n).
struct TotalCochain {
  Index n = 0;
  RatVector coeffs;
};

TriCochain zero_cochain(const CochainComplex& cx, const Degree& d);
/// Value on arbitrary (not necessarily sorted) index tuples, with the alternating sign.
RatVector evaluate(const CochainComplex& cx, const TriCochain& w, std::vector<Index> xi, std::vector<Index> z);
/// Sets the value on an increasing key.
void set_value(const CochainComplex& cx, TriCochain& w, std::span<const Index> xi, std::span<const Index> z,
               const RatVector& value);

TriCochain delta_r(const CochainComplex& cx, const TriCochain& w);
TriCochain delta_1(const CochainComplex& cx, const TriCochain& w);
TriCochain partial(const CochainComplex& cx, const TriCochain& w);
TriCochain difference_k(const CochainComplex& cx, const TriCochain& w, Index k);

TriCochain part(const CochainComplex& cx, const TotalCochain& c, const Degree& d);
TotalCochain assemble_total(const CochainComplex& cx, Index n, const std::vector<TriCochain>& parts);
TotalCochain nabla(const CochainComplex& cx, const TotalCochain& c);

/// Total differential d = delta + (-1)^q partial on the trivial-coefficient double complex.
SparseRatMatrix trivial_total_differential(const CrossedModule& X, Index n);

/// Every commutation and homotopy identity of the triple complex, per basis cochain.
Report identity_suite(const CochainComplex& cx, Index max_degree);

}  // namespace lie2
