#include "lie2/cochain.hpp"
#include "lie2/parallel.hpp"

namespace lie2 {

std::string to_string(const Degree& d) {
  return "(" + std::to_string(d.p) + "," + std::to_string(d.q) + "," + std::to_string(d.r) + ")";
}

CochainComplex::CochainComplex(TwoRep rep, Options opts) : rep_(std::move(rep)), opts_(opts) {}

Index CochainComplex::space_dim(const Degree& d) const {
  if (d.p < 0 || d.q < 0 || d.r < 0) return 0;
  return binomial(nerve_dim(d.p), d.q) * binomial(g_dim(), d.r) * value_dim(d.r);
}

const TupleIndex& CochainComplex::xi_index(Index p, Index q) const {
  std::lock_guard lock(mu_);
  auto& slot = tuples_[{p, q}];
  if (!slot) slot = std::make_unique<TupleIndex>(nerve_dim(p), q);
  return *slot;
}

const TupleIndex& CochainComplex::z_index(Index r) const {
  std::lock_guard lock(mu_);
  auto& slot = tuples_[{-1, r}];
  if (!slot) slot = std::make_unique<TupleIndex>(g_dim(), r);
  return *slot;
}

const NerveSpace& CochainComplex::nerve(Index p) const {
  {
    std::lock_guard lock(mu_);
    if (auto it = nerves_.find(p); it != nerves_.end()) return *it->second;
  }
  auto built = std::make_unique<NerveSpace>(nerve_space(rep_.source, p));
  std::lock_guard lock(mu_);
  auto& slot = nerves_[p];
  if (!slot) slot = std::move(built);
  return *slot;
}

const RatMatrix& CochainComplex::face(Index p, Index k) const {
  std::lock_guard lock(mu_);
  auto& slot = faces_[{p, k}];
  if (!slot) slot = std::make_unique<RatMatrix>(face_map(rep_.source, p, k));
  return *slot;
}

int CochainComplex::sign_difference(const Degree& d, Index k) const {
  const Index e = d.r + (k - 1) * d.q + k * (k - 1) / 2;
  return e % 2 == 0 ? 1 : -1;
}

const SparseRatMatrix& CochainComplex::cached(const Key& key, const std::function<SparseRatMatrix()>& build) const {
  {
    std::lock_guard lock(mu_);
    if (auto it = blocks_.find(key); it != blocks_.end()) return *it->second;
  }
  auto built = std::make_unique<SparseRatMatrix>(build());
  std::lock_guard lock(mu_);
  auto& slot = blocks_[key];
  if (!slot) slot = std::move(built);
  return *slot;
}

const SparseRatMatrix& CochainComplex::delta_r(const Degree& d) const {
  return cached({0, 0, d.p, d.q, d.r}, [&] { return build_delta_r(d); });
}
const SparseRatMatrix& CochainComplex::delta_1(const Degree& d) const {
  return cached({1, 0, d.p, d.q, d.r}, [&] { return build_delta_1(d); });
}
const SparseRatMatrix& CochainComplex::partial(const Degree& d) const {
  return cached({2, 0, d.p, d.q, d.r}, [&] { return build_partial(d); });
}
const SparseRatMatrix& CochainComplex::difference(Index k, const Degree& d) const {
  if (k < 1 || k > d.r) throw InputError("difference map needs 1 <= k <= r");
  return cached({3, k, d.p, d.q, d.r}, [&] { return build_difference(k, d); });
}

// CE differential of g_p with coefficients in (rho00 or rho^(r)) pulled back along the final target.
SparseRatMatrix CochainComplex::build_delta_r(const Degree& d) const {
  const Index coeff = binomial(g_dim(), d.r) * value_dim(d.r);
  const NerveSpace& N = nerve(d.p);
  std::vector<RatMatrix> base;
  if (d.r == 0) {
    base = rep_.rho00;
  } else {
    std::unique_lock lock(mu_);
    auto& slot = coeff_reps_[d.r];
    if (!slot) {
      lock.unlock();
      auto built = std::make_unique<LinRep>(rep_r(rep_, d.r));
      lock.lock();
      if (!slot) slot = std::move(built);
    }
    base = slot->mats;
  }
  const RatMatrix t = final_target(rep_.source, d.p);
  std::vector<RatMatrix> action(static_cast<std::size_t>(N.dim()), RatMatrix::Zero(coeff, coeff));
  for (Index i = 0; i < N.dim(); ++i)
    for (Index j = 0; j < rep_.h_dim(); ++j)
      if (t(j, i) != 0) action[i] += t(j, i) * base[j];
  return ce_differential(N.algebra, action, coeff, d.q);
}

// Fixed Xi: CE differential of g with values in rho01 o mu; degree 0 uses rho1.
SparseRatMatrix CochainComplex::build_delta_1(const Degree& d) const {
  const Index nxi = xi_index(d.p, d.q).size();
  const Index n = g_dim(), w = rep_.w_dim();
  SparseRatMatrix small;
  if (d.r == 0) {
    RatMatrix m(n * w, rep_.v_dim());
    for (Index x = 0; x < n; ++x) m.middleRows(x * w, w) = rep_.rho1[x];
    small = m.sparseView();
  } else {
    std::vector<RatMatrix> act;
    for (Index x = 0; x < n; ++x) act.push_back(rep_.rho01_of(rep_.source.mu.col(x)));
    small = ce_differential(rep_.source.g, act, w, d.r);
  }
  std::vector<Triplet> trips;
  for (Index c = 0; c < small.outerSize(); ++c)
    for (SparseRatMatrix::InnerIterator it(small, c); it; ++it)
      for (Index b = 0; b < nxi; ++b) trips.emplace_back(b * small.rows() + it.row(), b * small.cols() + c, it.value());
  SparseRatMatrix out(nxi * small.rows(), nxi * small.cols());
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

// partial = sum_k (-1)^k face_k^*, acting on the Xi arguments only.
SparseRatMatrix CochainComplex::build_partial(const Degree& d) const {
  const TupleIndex& src = xi_index(d.p, d.q);
  const TupleIndex& dst = xi_index(d.p + 1, d.q);
  const Index m = binomial(g_dim(), d.r) * value_dim(d.r);
  std::vector<const RatMatrix*> faces;
  for (Index k = 0; k <= d.p + 1; ++k) faces.push_back(&face(d.p, k));
  return assemble_sparse(dst.size() * m, src.size() * m, dst.size(), [&](Index lo, Index hi, std::vector<Triplet>& out) {
    std::map<Index, Rat> row;
    std::vector<LinComb> args(static_cast<std::size_t>(d.q));
    for (Index t = lo; t < hi; ++t) {
      row.clear();
      auto T = dst.tuple(t);
      for (Index k = 0; k <= d.p + 1; ++k) {
        for (Index a = 0; a < d.q; ++a) args[a] = lincomb_of(*faces[k], T[a]);
        const bool odd = k % 2 == 1;
        expand_alternating(src, args, [&](Index s, const Rat& c) { row[s] += odd ? Rat(-c) : c; });
      }
      for (const auto& [s, c] : row) {
        if (c == 0) continue;
        for (Index a = 0; a < m; ++a) out.emplace_back(t * m + a, s * m + a, c);
      }
    }
  });
}

// Delta_k w(Xi; Z) = sum_{a_1<...<a_k} (-1)^{a_1+...+a_k} w(d_0 Xi(a); x^0_{a_1}, ..., x^0_{a_k}, Z).
// On basis vectors only the first k positions can carry block-0 entries, and then must.
SparseRatMatrix CochainComplex::build_difference(Index k, const Degree& d) const {
  const Index n = g_dim();
  const Degree tgt{d.p + 1, d.q + k, d.r - k};
  const TupleIndex& src_xi = xi_index(d.p, d.q);
  const TupleIndex& dst_xi = xi_index(tgt.p, tgt.q);
  const TupleIndex& src_z = z_index(d.r);
  const TupleIndex& dst_z = z_index(tgt.r);
  const Index w = rep_.w_dim(), vt = value_dim(tgt.r);
  const int base_sign = (k * (k - 1) / 2) % 2 == 0 ? 1 : -1;
  const RatMatrix& phi = rep_.phi();
  const int flip = (opts_.flip_difference && k == 1) ? -1 : 1;
  return assemble_sparse(space_dim(tgt), space_dim(d), dst_xi.size(), [&](Index lo, Index hi, std::vector<Triplet>& out) {
    std::vector<Index> rest, zs;
    for (Index t = lo; t < hi; ++t) {
      auto T = dst_xi.tuple(t);
      Index zeros = 0;
      while (zeros < tgt.q && T[zeros] < n) ++zeros;
      if (zeros != k) continue;
      rest.clear();
      for (Index a = k; a < tgt.q; ++a) rest.push_back(T[a] - n);
      const Index s_xi = src_xi.rank(rest);
      for (Index zt = 0; zt < dst_z.size(); ++zt) {
        auto Z = dst_z.tuple(zt);
        zs.assign(T.begin(), T.begin() + k);
        zs.insert(zs.end(), Z.begin(), Z.end());
        const int s = sort_sign(zs);
        if (s == 0) continue;
        const int sign = s * base_sign * flip;
        const Index row0 = (t * dst_z.size() + zt) * vt;
        const Index col0 = (s_xi * src_z.size() + src_z.rank(zs)) * w;
        if (tgt.r >= 1) {
          for (Index a = 0; a < w; ++a) out.emplace_back(row0 + a, col0 + a, Rat(sign));
        } else {
          for (Index a = 0; a < vt; ++a)
            for (Index b = 0; b < w; ++b)
              if (phi(a, b) != 0) out.emplace_back(row0 + a, col0 + b, sign * phi(a, b));
        }
      }
    }
  });
}

std::vector<Degree> CochainComplex::blocks(Index n) {
  std::vector<Degree> out;
  for (Index p = 0; p <= n; ++p)
    for (Index q = 0; q <= n - p; ++q) out.push_back({p, q, n - p - q});
  return out;
}

Index CochainComplex::total_dim(Index n) const {
  Index s = 0;
  for (const auto& d : blocks(n)) s += space_dim(d);
  return s;
}

Index CochainComplex::block_offset(const Degree& d) const {
  Index s = 0;
  for (const auto& b : blocks(d.total())) {
    if (b == d) return s;
    s += space_dim(b);
  }
  throw InputError("degree not found");
}

SparseRatMatrix CochainComplex::nabla_matrix(Index n) const {
  std::vector<Triplet> trips;
  auto add = [&](const SparseRatMatrix& m, const Degree& src, const Degree& dst, int sign) {
    if (space_dim(dst) == 0 || space_dim(src) == 0) return;
    const Index r0 = block_offset(dst), c0 = block_offset(src);
    for (Index c = 0; c < m.outerSize(); ++c)
      for (SparseRatMatrix::InnerIterator it(m, c); it; ++it)
        trips.emplace_back(r0 + it.row(), c0 + c, sign > 0 ? it.value() : Rat(-it.value()));
  };
  for (const auto& d : blocks(n)) {
    if (space_dim(d) == 0) continue;
    add(delta_r(d), d, {d.p, d.q + 1, d.r}, sign_delta_r(d));
    add(delta_1(d), d, {d.p, d.q, d.r + 1}, sign_delta_1(d));
    add(partial(d), d, {d.p + 1, d.q, d.r}, sign_partial(d));
    for (Index k = 1; k <= d.r; ++k) add(difference(k, d), d, {d.p + 1, d.q + k, d.r - k}, sign_difference(d, k));
  }
  SparseRatMatrix out(total_dim(n + 1), total_dim(n));
  out.setFromTriplets(trips.begin(), trips.end());
  out.prune([](Index, Index, const Rat& v) { return v != 0; });
  return out;
}

TriCochain zero_cochain(const CochainComplex& cx, const Degree& d) {
  return {d, RatVector::Zero(cx.space_dim(d))};
}

RatVector evaluate(const CochainComplex& cx, const TriCochain& w, std::vector<Index> xi, std::vector<Index> z) {
  const Degree& d = w.degree;
  const Index vd = cx.value_dim(d.r);
  if (static_cast<Index>(xi.size()) != d.q || static_cast<Index>(z.size()) != d.r)
    throw InputError("evaluate: argument count does not match the degree");
  const int s = sort_sign(xi) * sort_sign(z);
  if (s == 0) return RatVector::Zero(vd);
  const TupleIndex& Z = cx.z_index(d.r);
  const Index key = cx.xi_index(d.p, d.q).rank(xi) * Z.size() + Z.rank(z);
  RatVector v = w.coeffs.segment(key * vd, vd);
  return s > 0 ? v : RatVector(-v);
}

void set_value(const CochainComplex& cx, TriCochain& w, std::span<const Index> xi, std::span<const Index> z,
               const RatVector& value) {
  const Index vd = cx.value_dim(w.degree.r);
  const TupleIndex& Z = cx.z_index(w.degree.r);
  const Index key = cx.xi_index(w.degree.p, w.degree.q).rank(xi) * Z.size() + Z.rank(z);
  w.coeffs.segment(key * vd, vd) = value;
}

TriCochain delta_r(const CochainComplex& cx, const TriCochain& w) {
  const Degree& d = w.degree;
  return {{d.p, d.q + 1, d.r}, cx.delta_r(d) * w.coeffs};
}
TriCochain delta_1(const CochainComplex& cx, const TriCochain& w) {
  const Degree& d = w.degree;
  return {{d.p, d.q, d.r + 1}, cx.delta_1(d) * w.coeffs};
}
TriCochain partial(const CochainComplex& cx, const TriCochain& w) {
  const Degree& d = w.degree;
  return {{d.p + 1, d.q, d.r}, cx.partial(d) * w.coeffs};
}
TriCochain difference_k(const CochainComplex& cx, const TriCochain& w, Index k) {
  const Degree& d = w.degree;
  return {{d.p + 1, d.q + k, d.r - k}, cx.difference(k, d) * w.coeffs};
}

TriCochain part(const CochainComplex& cx, const TotalCochain& c, const Degree& d) {
  return {d, c.coeffs.segment(cx.block_offset(d), cx.space_dim(d))};
}

TotalCochain assemble_total(const CochainComplex& cx, Index n, const std::vector<TriCochain>& parts) {
  TotalCochain c{n, RatVector::Zero(cx.total_dim(n))};
  for (const auto& w : parts) {
    if (w.degree.total() != n) throw InputError("part has the wrong total degree");
    c.coeffs.segment(cx.block_offset(w.degree), cx.space_dim(w.degree)) += w.coeffs;
  }
  return c;
}

TotalCochain nabla(const CochainComplex& cx, const TotalCochain& c) {
  return {c.n + 1, cx.nabla_matrix(c.n) * c.coeffs};
}

SparseRatMatrix trivial_total_differential(const CrossedModule& X, Index n) {
  auto dim_of = [&](Index p, Index q) { return binomial(p * X.g.dim() + X.h.dim(), q); };
  auto offset = [&](Index total, Index p) {
    Index s = 0;
    for (Index a = 0; a < p; ++a) s += dim_of(a, total - a);
    return s;
  };
  Index rows = 0, cols = 0;
  for (Index p = 0; p <= n + 1; ++p) rows += dim_of(p, n + 1 - p);
  for (Index p = 0; p <= n; ++p) cols += dim_of(p, n - p);
  std::vector<Triplet> trips;
  for (Index p = 0; p <= n; ++p) {
    const Index q = n - p;
    const Index c0 = offset(n, p);
    NerveSpace N = nerve_space(X, p);
    SparseRatMatrix d = ce_differential(N.algebra, std::vector<RatMatrix>(N.dim(), RatMatrix::Zero(1, 1)), 1, q);
    const Index r0 = offset(n + 1, p);
    for (Index c = 0; c < d.outerSize(); ++c)
      for (SparseRatMatrix::InnerIterator it(d, c); it; ++it) trips.emplace_back(r0 + it.row(), c0 + c, it.value());
    // (-1)^q partial, partial = sum_k (-1)^k (wedge^q face_k)^T
    RatMatrix pull = RatMatrix::Zero(dim_of(p + 1, q), dim_of(p, q));
    for (Index k = 0; k <= p + 1; ++k) {
      RatMatrix e = exterior_power(face_map(X, p, k), q).transpose();
      if (k % 2 == 0) pull += e; else pull -= e;
    }
    const Index r1 = offset(n + 1, p + 1);
    const bool neg = q % 2 == 1;
    for (Index i = 0; i < pull.rows(); ++i)
      for (Index j = 0; j < pull.cols(); ++j)
        if (pull(i, j) != 0) trips.emplace_back(r1 + i, c0 + j, neg ? Rat(-pull(i, j)) : pull(i, j));
  }
  SparseRatMatrix out(rows, cols);
  out.setFromTriplets(trips.begin(), trips.end());
  out.prune([](Index, Index, const Rat& v) { return v != 0; });
  return out;
}

namespace {

class IdentityChecker {
 public:
  IdentityChecker(const CochainComplex& cx, Report& out) : cx_(cx), out_(out) {}

  using Term = std::pair<int, SparseRatMatrix>;

  void check(const std::string& family, const Degree& src, const std::vector<Term>& terms) {
    if (cx_.space_dim(src) == 0 || terms.empty()) return;
    SparseRatMatrix sum = terms.front().first > 0 ? terms.front().second : SparseRatMatrix(-terms.front().second);
    for (std::size_t i = 1; i < terms.size(); ++i) {
      if (terms[i].first > 0) sum += terms[i].second;
      else sum -= terms[i].second;
    }
    Index bad = 0;
    for (Index c = 0; c < sum.outerSize(); ++c)
      for (SparseRatMatrix::InnerIterator it(sum, c); it; ++it)
        if (it.value() != 0) {
          ++bad;
          break;
        }
    if (bad > 0)
      out_.push_back({family, {src.p, src.q, src.r}, std::to_string(bad) + " basis cochains with nonzero residue"});
  }

 private:
  const CochainComplex& cx_;
  Report& out_;
};

}  // namespace

// Operator identities read off from nabla^2 = 0 component by component (see SIGNS.md).
Report identity_suite(const CochainComplex& cx, Index max_degree) {
  Report out;
  IdentityChecker chk(cx, out);
  auto dr = [&](Degree d) -> const SparseRatMatrix& { return cx.delta_r(d); };
  auto d1 = [&](Degree d) -> const SparseRatMatrix& { return cx.delta_1(d); };
  auto pa = [&](Degree d) -> const SparseRatMatrix& { return cx.partial(d); };
  auto D = [&](Index k, Degree d) -> const SparseRatMatrix& { return cx.difference(k, d); };
  auto mul = [](const SparseRatMatrix& a, const SparseRatMatrix& b) { return SparseRatMatrix(a * b); };
  for (Index n = 0; n <= max_degree; ++n) {
    for (const Degree& s : CochainComplex::blocks(n)) {
      const Index p = s.p, q = s.q, r = s.r;
      chk.check("partial-squared", s, {{1, mul(pa({p + 1, q, r}), pa(s))}});
      chk.check("delta-r-squared", s, {{1, mul(dr({p, q + 1, r}), dr(s))}});
      chk.check("delta-1-squared", s, {{1, mul(d1({p, q, r + 1}), d1(s))}});
      chk.check("p-page", s, {{1, mul(dr({p, q, r + 1}), d1(s))}, {-1, mul(d1({p, q + 1, r}), dr(s))}});
      chk.check("q-page", s, {{1, mul(pa({p, q, r + 1}), d1(s))}, {-1, mul(d1({p + 1, q, r}), pa(s))}});
      // delta partial - partial delta = delta_(1) Delta + Delta delta_(1), the first term absent at r = 0
      std::vector<IdentityChecker::Term> homotopy{{1, mul(dr({p + 1, q, r}), pa(s))},
                                                  {-1, mul(pa({p, q + 1, r}), dr(s))},
                                                  {-1, mul(D(1, {p, q, r + 1}), d1(s))}};
      if (r >= 1) homotopy.push_back({-1, mul(d1({p + 1, q + 1, r - 1}), D(1, s))});
      chk.check(r == 0 ? "alg-up-to-homotopy" : "star-top", s, homotopy);
      for (Index k = 1; k <= r; ++k) {
        const int sk = k % 2 == 0 ? 1 : -1;
        // delta Delta_k - (-1)^k Delta_k delta = delta_(1) Delta_{k+1} + (-1)^k Delta_{k+1} delta_(1)
        std::vector<IdentityChecker::Term> t{{1, mul(dr({p + 1, q + k, r - k}), D(k, s))},
                                             {-sk, mul(D(k, {p, q + 1, r}), dr(s))},
                                             {-sk, mul(D(k + 1, {p, q, r + 1}), d1(s))}};
        if (k < r) t.push_back({-1, mul(d1({p + 1, q + k + 1, r - k - 1}), D(k + 1, s))});
        chk.check(k < r ? "alg-diffs-i" : (r == 1 ? "first-higher" : "alg-diffs-ii"), s, t);
        // sum_{i+j=k} Delta_i Delta_j = 0 with Delta_0 = partial
        std::vector<IdentityChecker::Term> u{{1, mul(pa({p + 1, q + k, r - k}), D(k, s))},
                                             {1, mul(D(k, {p + 1, q, r}), pa(s))}};
        for (Index j = 1; j < k; ++j) u.push_back({1, mul(D(k - j, {p + 1, q + j, r - j}), D(j, s))});
        chk.check(k == 1 ? "partial-delta" : "alg-diffs-iii", s, u);
      }
    }
  }
  return out;
}

}  // namespace lie2
