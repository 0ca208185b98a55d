#include "lie2/ratmat.hpp"
#include "lie2/tuples.hpp"

#include <charconv>

namespace lie2 {

namespace {

Integer parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw InputError("malformed rational: '" + std::string(s) + "'");
  std::string t(s);
  if (t.front() == '+') t.erase(0, 1);
  return Integer(t);
}

Rat small_det(RatMatrix a) {
  const Index n = a.rows();
  Rat det = 1;
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Index i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) / a(c, c);
      for (Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rat(num, den);
}

std::string format_rat(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

std::vector<SparseRow<Rat>> sparse_rows(const SparseRatMatrix& m) {
  std::vector<SparseRow<Rat>> rows(static_cast<std::size_t>(m.rows()));
  for (Index j = 0; j < m.outerSize(); ++j)
    for (SparseRatMatrix::InnerIterator it(m, j); it; ++it)
      if (it.value() != 0) rows[it.row()].emplace_back(j, it.value());
  return rows;  // column-major traversal keeps each row sorted
}

RowEchelon<Rat> row_echelon(const SparseRatMatrix& m) {
  RowEchelon<Rat> e(m.cols());
  for (const auto& row : sparse_rows(m)) e.insert(row);
  return e;
}

Index bareiss_rank(const RatMatrix& m) {
  const Index rows = m.rows(), cols = m.cols();
  DenseMatrix<Integer> a(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    Integer l = 1;
    for (Index j = 0; j < cols; ++j) l = boost::multiprecision::lcm(l, Integer(denominator(m(i, j))));
    for (Index j = 0; j < cols; ++j) a(i, j) = numerator(m(i, j)) * (l / denominator(m(i, j)));
  }
  Integer prev = 1;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j) a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

Subspace kernel_basis(const SparseRatMatrix& m) { return {m.cols(), kernel_from_echelon(row_echelon(m))}; }

namespace {

std::optional<RatVector> solve_rows(std::vector<SparseRow<Rat>> rows, Index n, const RatVector& b) {
  if (static_cast<Index>(rows.size()) != b.size()) throw InputError("solve: right-hand side has wrong length");
  RowEchelon<Rat> e(n + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (b(static_cast<Index>(i)) != 0) rows[i].emplace_back(n, b(static_cast<Index>(i)));
    e.insert(rows[i]);
  }
  if (e.is_pivot(n)) return std::nullopt;
  RatVector x = RatVector::Zero(n);
  for (Index p : e.pivot_columns()) {
    const auto& row = e.row_for_pivot(p);
    if (row.back().first == n) x(p) = row.back().second;
  }
  return x;
}

}  // namespace

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  std::vector<SparseRow<Rat>> rows;
  for (Index i = 0; i < m.rows(); ++i) rows.push_back(sparse_row(m, i));
  return solve_rows(std::move(rows), m.cols(), b);
}

std::optional<RatVector> solve(const SparseRatMatrix& m, const RatVector& b) {
  return solve_rows(sparse_rows(m), m.cols(), b);
}

Subspace column_space(const RatMatrix& m) {
  RowEchelon<Rat> e(m.rows());
  std::vector<Index> keep;
  for (Index j = 0; j < m.cols(); ++j)
    if (e.insert(sparse_column(m, j))) keep.push_back(j);
  RatMatrix basis(m.rows(), static_cast<Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) basis.col(static_cast<Index>(k)) = m.col(keep[k]);
  return {m.rows(), basis};
}

Subspace column_space(const SparseRatMatrix& m) {
  RowEchelon<Rat> e(m.rows());
  std::vector<SparseRow<Rat>> kept;
  for (Index j = 0; j < m.outerSize(); ++j) {
    SparseRow<Rat> col;
    for (SparseRatMatrix::InnerIterator it(m, j); it; ++it)
      if (it.value() != 0) col.emplace_back(it.row(), it.value());
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (e.insert(col)) kept.push_back(std::move(col));
  }
  RatMatrix basis = RatMatrix::Zero(m.rows(), static_cast<Index>(kept.size()));
  for (std::size_t k = 0; k < kept.size(); ++k)
    for (const auto& [i, v] : kept[k]) basis(i, static_cast<Index>(k)) = v;
  return {m.rows(), basis};
}

bool in_span(const Subspace& s, const RatVector& v) {
  RowEchelon<Rat> e(s.ambient_dim);
  for (Index j = 0; j < s.dim(); ++j) e.insert(sparse_column(s.basis, j));
  return e.reduce(sparse_column(v, 0)).empty();
}

Index quotient_dim(const Subspace& ker, const Subspace& img) {
  if (ker.ambient_dim != img.ambient_dim) throw InputError("quotient_dim: ambient dimensions differ");
  RowEchelon<Rat> e(ker.ambient_dim);
  for (Index j = 0; j < ker.dim(); ++j) e.insert(sparse_column(ker.basis, j));
  for (Index j = 0; j < img.dim(); ++j)
    if (!e.reduce(sparse_column(img.basis, j)).empty())
      throw NotSubcomplexError("image column " + std::to_string(j) + " is not in the kernel");
  return ker.dim() - img.dim();
}

RatMatrix complement_in(const Subspace& ker, const Subspace& img) {
  RowEchelon<Rat> e(ker.ambient_dim);
  for (Index j = 0; j < img.dim(); ++j) e.insert(sparse_column(img.basis, j));
  std::vector<Index> keep;
  for (Index j = 0; j < ker.dim(); ++j)
    if (e.insert(sparse_column(ker.basis, j))) keep.push_back(j);
  RatMatrix reps(ker.ambient_dim, static_cast<Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) reps.col(static_cast<Index>(k)) = ker.basis.col(keep[k]);
  return reps;
}

std::optional<RatVector> coordinates(const RatMatrix& basis, const RatVector& v) {
  auto x = solve(basis, v);
  return x;
}

RatMatrix exterior_power(const RatMatrix& m, Index q) {
  TupleIndex rows(m.rows(), q), cols(m.cols(), q);
  RatMatrix out = RatMatrix::Zero(rows.size(), cols.size());
  RatMatrix sub(q, q);
  for (Index a = 0; a < rows.size(); ++a) {
    auto rt = rows.tuple(a);
    for (Index b = 0; b < cols.size(); ++b) {
      auto ct = cols.tuple(b);
      for (Index i = 0; i < q; ++i)
        for (Index j = 0; j < q; ++j) sub(i, j) = m(rt[i], ct[j]);
      out(a, b) = small_det(sub);
    }
  }
  return out;
}

bool is_zero(const RatMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

bool is_zero(const SparseRatMatrix& m) {
  for (Index j = 0; j < m.outerSize(); ++j)
    for (SparseRatMatrix::InnerIterator it(m, j); it; ++it)
      if (it.value() != 0) return false;
  return true;
}

}  // namespace lie2
