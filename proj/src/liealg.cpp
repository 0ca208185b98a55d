#include "lie2/liealg.hpp"
#include "lie2/parallel.hpp"
#include "lie2/tuples.hpp"

namespace lie2 {

LieAlgebra::LieAlgebra(Index dim, std::vector<std::string> names)
    : dim_(dim), c_(static_cast<std::size_t>(dim * dim * dim)), names_(std::move(names)) {
  if (names_.empty())
    for (Index i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i));
  if (static_cast<Index>(names_.size()) != dim) throw InputError("basis name count differs from dim");
}

LieAlgebra::LieAlgebra(Index dim, std::vector<Rat> constants, std::vector<std::string> names)
    : LieAlgebra(dim, std::move(names)) {
  if (static_cast<Index>(constants.size()) != dim * dim * dim) throw InputError("structure constant tensor has wrong size");
  c_ = std::move(constants);
}

void LieAlgebra::set_bracket(Index i, Index j, const RatVector& v) {
  if (v.size() != dim_) throw InputError("bracket vector has wrong length");
  for (Index k = 0; k < dim_; ++k) {
    c_[(i * dim_ + j) * dim_ + k] = v(k);
    c_[(j * dim_ + i) * dim_ + k] = -v(k);
  }
}

RatVector LieAlgebra::bracket(const RatVector& u, const RatVector& v) const {
  if (u.size() != dim_ || v.size() != dim_) throw InputError("bracket: vector length differs from dim");
  RatVector out = RatVector::Zero(dim_);
  for (Index i = 0; i < dim_; ++i) {
    if (u(i) == 0) continue;
    for (Index j = 0; j < dim_; ++j) {
      if (v(j) == 0) continue;
      const Rat uv = u(i) * v(j);
      for (Index k = 0; k < dim_; ++k)
        if (c(i, j, k) != 0) out(k) += uv * c(i, j, k);
    }
  }
  return out;
}

RatVector LieAlgebra::bracket_basis(Index i, Index j) const {
  RatVector out(dim_);
  for (Index k = 0; k < dim_; ++k) out(k) = c(i, j, k);
  return out;
}

RatMatrix LieAlgebra::ad(Index i) const {
  RatMatrix m(dim_, dim_);
  for (Index j = 0; j < dim_; ++j)
    for (Index k = 0; k < dim_; ++k) m(k, j) = c(i, j, k);
  return m;
}

RatMatrix LieAlgebra::ad(const RatVector& u) const {
  RatMatrix m = RatMatrix::Zero(dim_, dim_);
  for (Index i = 0; i < dim_; ++i)
    if (u(i) != 0) m += u(i) * ad(i);
  return m;
}

Report check_lie_algebra(const LieAlgebra& L) {
  Report rep;
  const Index n = L.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (L.c(i, j, k) + L.c(j, i, k) != 0) {
          rep.push_back({"antisymmetry", {i, j}, "component " + std::to_string(k)});
          break;
        }
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k) {
        RatVector ei = RatVector::Unit(n, i), ej = RatVector::Unit(n, j), ek = RatVector::Unit(n, k);
        RatVector s = L.bracket(ei, L.bracket_basis(j, k)) + L.bracket(ej, L.bracket_basis(k, i)) +
                      L.bracket(ek, L.bracket_basis(i, j));
        if (!is_zero(RatMatrix(s))) rep.push_back({"jacobi", {i, j, k}, ""});
      }
  return rep;
}

bool is_homomorphism(const LieAlgebra& src, const LieAlgebra& dst, const RatMatrix& m) {
  if (m.rows() != dst.dim() || m.cols() != src.dim()) throw InputError("is_homomorphism: shape mismatch");
  for (Index i = 0; i < src.dim(); ++i)
    for (Index j = i + 1; j < src.dim(); ++j) {
      RatVector lhs = m * src.bracket_basis(i, j);
      RatVector rhs = dst.bracket(m.col(i), m.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

LieAlgebra restrict_to(const LieAlgebra& L, const RatMatrix& basis) {
  const Index d = basis.cols();
  LieAlgebra out(d);
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      auto x = solve(basis, L.bracket(basis.col(i), basis.col(j)));
      if (!x) throw DomainError("subspace is not closed under the bracket");
      out.set_bracket(i, j, *x);
    }
  return out;
}

RatMatrix LinRep::act(const RatVector& u) const {
  RatMatrix m = RatMatrix::Zero(space_dim, space_dim);
  for (Index i = 0; i < algebra.dim(); ++i)
    if (u(i) != 0) m += u(i) * mats[i];
  return m;
}

LinRep trivial_rep(const LieAlgebra& L, Index space_dim) {
  return {L, space_dim, std::vector<RatMatrix>(L.dim(), RatMatrix::Zero(space_dim, space_dim))};
}

LinRep adjoint(const LieAlgebra& L) {
  LinRep r{L, L.dim(), {}};
  for (Index i = 0; i < L.dim(); ++i) r.mats.push_back(L.ad(i));
  return r;
}

Report check_rep(const LinRep& rep) {
  Report out;
  const Index n = rep.algebra.dim();
  if (static_cast<Index>(rep.mats.size()) != n) {
    out.push_back({"shape", {}, "one matrix per basis element expected"});
    return out;
  }
  for (Index i = 0; i < n; ++i) {
    if (rep.mats[i].rows() != rep.space_dim || rep.mats[i].cols() != rep.space_dim) {
      out.push_back({"shape", {i}, "action matrix has wrong size"});
      return out;
    }
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      RatMatrix lhs = rep.act(rep.algebra.bracket_basis(i, j));
      RatMatrix rhs = rep.mats[i] * rep.mats[j] - rep.mats[j] * rep.mats[i];
      if (lhs != rhs) out.push_back({"representation", {i, j}, ""});
    }
  return out;
}

SparseRatMatrix ce_differential(const LieAlgebra& L, const std::vector<RatMatrix>& action, Index coeff_dim, Index q) {
  const Index n = L.dim();
  TupleIndex src(n, q), dst(n, q + 1);
  return assemble_sparse(dst.size() * coeff_dim, src.size() * coeff_dim, dst.size(),
                         [&](Index lo, Index hi, std::vector<Triplet>& out) {
    std::vector<Index> rest;
    for (Index t = lo; t < hi; ++t) {
      auto T = dst.tuple(t);
      const Index row0 = t * coeff_dim;
      // sum_j (-1)^j rho(x_j) w(X(j))
      for (Index j = 0; j <= q; ++j) {
        rest.assign(T.begin(), T.end());
        rest.erase(rest.begin() + j);
        const Index col0 = src.rank(rest) * coeff_dim;
        const RatMatrix& a = action[T[j]];
        for (Index r = 0; r < coeff_dim; ++r)
          for (Index c = 0; c < coeff_dim; ++c)
            if (a(r, c) != 0) out.emplace_back(row0 + r, col0 + c, (j % 2 == 0) ? a(r, c) : Rat(-a(r, c)));
      }
      // sum_{m<n} (-1)^{m+n} w([x_m, x_n], X(m,n))
      for (Index m = 0; m <= q; ++m)
        for (Index nn = m + 1; nn <= q; ++nn)
          for (Index k = 0; k < n; ++k) {
            const Rat& ck = L.c(T[m], T[nn], k);
            if (ck == 0) continue;
            rest.clear();
            rest.push_back(k);
            for (Index i = 0; i <= q; ++i)
              if (i != m && i != nn) rest.push_back(T[i]);
            const int s = sort_sign(rest);
            if (s == 0) continue;
            const Rat v = ((m + nn) % 2 == 0 ? 1 : -1) * s * ck;
            const Index col0 = src.rank(rest) * coeff_dim;
            for (Index r = 0; r < coeff_dim; ++r) out.emplace_back(row0 + r, col0 + r, v);
          }
    }
  });
}

RatMatrix ce_matrix(const LinRep& rep, Index q) {
  return RatMatrix(ce_differential(rep.algebra, rep.mats, rep.space_dim, q));
}

bool dga_pullback_check(const LieAlgebra& src, const LieAlgebra& dst, const RatMatrix& m) {
  if (m.rows() != dst.dim() || m.cols() != src.dim()) throw InputError("dga_pullback_check: shape mismatch");
  for (Index q = 0; q <= 1; ++q) {
    RatMatrix d_dst = ce_matrix(trivial_rep(dst, 1), q);
    RatMatrix d_src = ce_matrix(trivial_rep(src, 1), q);
    RatMatrix pull_q = exterior_power(m, q).transpose();
    RatMatrix pull_q1 = exterior_power(m, q + 1).transpose();
    if (RatMatrix(pull_q1 * d_dst) != RatMatrix(d_src * pull_q)) return false;
  }
  return true;
}

LieAlgebra semidirect_with_module(const LinRep& rep) {
  const Index a = rep.algebra.dim(), n = a + rep.space_dim;
  LieAlgebra out(n);
  for (Index i = 0; i < a; ++i) {
    for (Index j = i + 1; j < a; ++j) {
      RatVector v = RatVector::Zero(n);
      v.head(a) = rep.algebra.bracket_basis(i, j);
      out.set_bracket(i, j, v);
    }
    for (Index j = 0; j < rep.space_dim; ++j) {
      RatVector v = RatVector::Zero(n);
      v.tail(rep.space_dim) = rep.mats[i].col(j);
      out.set_bracket(i, a + j, v);
    }
  }
  return out;
}

}  // namespace lie2
