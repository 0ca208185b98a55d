#pragma once

#include "lie2/io.hpp"

#include <random>

namespace testing {

using namespace lie2;

inline const Workspace& fixtures() {
  static const Workspace ws = [] {
    Workspace w;
    w.load_dir(LIE2_FIXTURE_DIR);
    return w;
  }();
  return ws;
}

// every 2-representation shipped in fixtures/ that is expected to be valid
inline const std::vector<std::string>& rep_names() {
  static const std::vector<std::string> names = {
      "trivial-on-Q",     "trivial-sl2-Q",      "trivial-heis3-Q",   "trivial-abelian2-Q", "trivial-idsl2-idQ",
      "adjoint-idsl2",    "adjoint-sl2",        "adjoint-heis3center", "adjoint-tuple",    "adjoint-classic",
      "adjoint-glproj",   "tautological-proj",  "unit-sl2",          "unit-heis3center"};
  return names;
}

inline TwoRep rep(const std::string& name) { return fixtures().two_rep(name); }
inline LieAlgebra algebra(const std::string& name) { return fixtures().lie_algebra(name); }
inline CrossedModule xmod(const std::string& name) { return fixtures().crossed_module(name); }

inline RatMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  RatMatrix m(rows, cols);
  for (Index i = 0; i < m.size(); ++i) m(i) = Rat(d(rng));
  return m;
}

inline RatVector unit(Index n, Index i) {
  RatVector v = RatVector::Zero(n);
  v(i) = 1;
  return v;
}

// Naive fraction Gauss elimination, kept apart from the library's echelon code.
inline Index naive_rank(RatMatrix m) {
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Index piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.row(r).swap(m.row(piv));
    for (Index i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rat f = m(i, c) / m(r, c);
      for (Index j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

inline RatMatrix dense(const SparseRatMatrix& s) { return s.toDense(); }

}  // namespace testing
