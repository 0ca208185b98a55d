#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lie2 {

using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Index = Eigen::Index;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = DenseMatrix<Rat>;
using RatVector = DenseVector<Rat>;
using SparseRatMatrix = Eigen::SparseMatrix<Rat, Eigen::ColMajor, Index>;
using Triplet = Eigen::Triplet<Rat, Index>;

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct NotSubcomplexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "p/q" or "p"; the result is always in lowest terms.
Rat parse_rat(std::string_view text);
std::string format_rat(const Rat& x);

/// Columns of `basis` are independent vectors of a space of dimension `ambient_dim`.
struct Subspace {
  Index ambient_dim = 0;
  RatMatrix basis;

  Subspace() = default;
  Subspace(Index ambient, RatMatrix b) : ambient_dim(ambient), basis(std::move(b)) {}
  static Subspace zero(Index ambient) { return {ambient, RatMatrix(ambient, 0)}; }
  static Subspace full(Index ambient) {
    return {ambient, RatMatrix::Identity(ambient, ambient)};
  }
  Index dim() const { return basis.cols(); }
};

/// Sparse row as (column, value) pairs sorted by column, no explicit zeros.
template <typename Scalar>
using SparseRow = std::vector<std::pair<Index, Scalar>>;

/**
 * Incremental reduced row echelon form over a field.
 *
 * Rows are kept fully reduced: each stored row has a leading 1 in its pivot
 * column and zeros in every other pivot column.
 */
template <typename Scalar>
class RowEchelon {
 public:
  explicit RowEchelon(Index cols) : cols_(cols), pivot_row_(cols, -1), acc_(cols), mark_(cols, 0) {}

  Index cols() const { return cols_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }
  const std::vector<Index>& pivot_columns() const { return pivots_; }
  bool is_pivot(Index c) const { return pivot_row_[c] >= 0; }
  const SparseRow<Scalar>& row_for_pivot(Index c) const { return rows_[pivot_row_[c]]; }

  SparseRow<Scalar> reduce(const SparseRow<Scalar>& row) {
    std::vector<Index> touched;
    touched.reserve(row.size() * 4);
    auto add = [&](Index c, const Scalar& v) {
      if (!mark_[c]) {
        mark_[c] = 1;
        touched.push_back(c);
        acc_[c] = v;
      } else {
        acc_[c] += v;
      }
    };
    for (const auto& [c, v] : row) add(c, v);
    // Pivot rows vanish on the other pivot columns, so the coefficient to
    // eliminate is the original entry.
    for (const auto& [c, v] : row) {
      const Index pr = pivot_row_[c];
      if (pr < 0 || v == 0) continue;
      for (const auto& [c2, v2] : rows_[pr]) add(c2, -(v * v2));
    }
    std::sort(touched.begin(), touched.end());
    SparseRow<Scalar> out;
    for (Index c : touched) {
      if (acc_[c] != 0) out.emplace_back(c, acc_[c]);
      mark_[c] = 0;
      acc_[c] = Scalar(0);
    }
    return out;
  }

  /// Returns true when the row increased the rank.
  bool insert(const SparseRow<Scalar>& row) {
    SparseRow<Scalar> r = reduce(row);
    if (r.empty()) return false;
    const Index lead = r.front().first;
    const Scalar inv = Scalar(1) / r.front().second;
    for (auto& e : r) e.second *= inv;
    for (auto& other : rows_) {
      auto it = std::lower_bound(other.begin(), other.end(), lead,
                                 [](const auto& e, Index c) { return e.first < c; });
      if (it == other.end() || it->first != lead) continue;
      const Scalar f = it->second;
      other = axpy(other, -f, r);
    }
    pivot_row_[lead] = static_cast<Index>(rows_.size());
    rows_.push_back(std::move(r));
    pivots_.push_back(lead);
    return true;
  }

  /// Pivot columns in increasing order.
  std::vector<Index> sorted_pivots() const {
    std::vector<Index> p = pivots_;
    std::sort(p.begin(), p.end());
    return p;
  }

 private:
  static SparseRow<Scalar> axpy(const SparseRow<Scalar>& a, const Scalar& f, const SparseRow<Scalar>& b) {
    SparseRow<Scalar> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, f * b[j].second);
        ++j;
      } else {
        Scalar v = a[i].second + f * b[j].second;
        if (v != 0) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  Index cols_;
  std::vector<SparseRow<Scalar>> rows_;
  std::vector<Index> pivots_;
  std::vector<Index> pivot_row_;
  std::vector<Scalar> acc_;
  std::vector<char> mark_;
};

template <typename Derived>
SparseRow<typename Derived::Scalar> sparse_row(const Eigen::MatrixBase<Derived>& m, Index i) {
  SparseRow<typename Derived::Scalar> row;
  for (Index j = 0; j < m.cols(); ++j)
    if (m(i, j) != 0) row.emplace_back(j, m(i, j));
  return row;
}

template <typename Derived>
SparseRow<typename Derived::Scalar> sparse_column(const Eigen::MatrixBase<Derived>& m, Index j) {
  SparseRow<typename Derived::Scalar> col;
  for (Index i = 0; i < m.rows(); ++i)
    if (m(i, j) != 0) col.emplace_back(i, m(i, j));
  return col;
}

/// Rows of a sparse matrix as sorted sparse rows.
std::vector<SparseRow<Rat>> sparse_rows(const SparseRatMatrix& m);

template <typename Derived>
RowEchelon<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& m) {
  RowEchelon<typename Derived::Scalar> e(m.cols());
  for (Index i = 0; i < m.rows(); ++i) e.insert(sparse_row(m, i));
  return e;
}
RowEchelon<Rat> row_echelon(const SparseRatMatrix& m);

/// Fraction-free (Bareiss) rank; rows are scaled to integers first.
Index bareiss_rank(const RatMatrix& m);

inline Index rank(const RatMatrix& m) { return bareiss_rank(m); }
inline Index rank(const SparseRatMatrix& m) { return row_echelon(m).rank(); }

/// Kernel basis read off the RREF: one vector per free column, in column order.
template <typename Scalar>
DenseMatrix<Scalar> kernel_from_echelon(const RowEchelon<Scalar>& e) {
  const Index n = e.cols();
  std::vector<Index> free_cols;
  for (Index c = 0; c < n; ++c)
    if (!e.is_pivot(c)) free_cols.push_back(c);
  std::vector<Index> slot(n, -1);
  for (std::size_t k = 0; k < free_cols.size(); ++k) slot[free_cols[k]] = static_cast<Index>(k);
  DenseMatrix<Scalar> k = DenseMatrix<Scalar>::Zero(n, static_cast<Index>(free_cols.size()));
  for (std::size_t f = 0; f < free_cols.size(); ++f) k(free_cols[f], static_cast<Index>(f)) = Scalar(1);
  for (Index p : e.pivot_columns()) {
    for (const auto& [c, v] : e.row_for_pivot(p)) {
      if (c == p) continue;
      k(p, slot[c]) = -v;
    }
  }
  return k;
}

template <typename Derived>
Subspace kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  return {m.cols(), kernel_from_echelon(row_echelon(m))};
}
Subspace kernel_basis(const SparseRatMatrix& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);
std::optional<RatVector> solve(const SparseRatMatrix& m, const RatVector& b);

/// Independent columns spanning the column space (a subset of the original columns).
Subspace column_space(const RatMatrix& m);
Subspace column_space(const SparseRatMatrix& m);

bool in_span(const Subspace& s, const RatVector& v);

/// dim(ker) - dim(img) after checking img is contained in ker.
Index quotient_dim(const Subspace& ker, const Subspace& img);

/// Kernel vectors completing the image basis, chosen greedily in kernel order.
RatMatrix complement_in(const Subspace& ker, const Subspace& img);

/// Coordinates of v with respect to the columns of an independent family.
std::optional<RatVector> coordinates(const RatMatrix& basis, const RatVector& v);

/// Matrix of the q-th exterior power: entry (T,S) is the minor on rows T, columns S.
RatMatrix exterior_power(const RatMatrix& m, Index q);

bool is_zero(const RatMatrix& m);
/// Exact equality including shape.
inline bool same(const RatMatrix& a, const RatMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}
bool is_zero(const SparseRatMatrix& m);

}  // namespace lie2
