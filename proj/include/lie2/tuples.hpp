#pragma once

#include "lie2/ratmat.hpp"

#include <functional>
#include <span>
#include <vector>

namespace lie2 {

Index binomial(Index n, Index k);

/// Strictly increasing k-tuples from {0..n-1}, ranked in lexicographic order.
class TupleIndex {
 public:
  TupleIndex() = default;
  TupleIndex(Index n, Index k);

  Index n() const { return n_; }
  Index k() const { return k_; }
  Index size() const { return size_; }
  std::span<const Index> tuple(Index rank) const {
    return {flat_.data() + rank * k_, static_cast<std::size_t>(k_)};
  }
  /// Rank of a strictly increasing tuple of length k.
  Index rank(std::span<const Index> t) const;

 private:
  Index n_ = 0, k_ = 0, size_ = 1;
  std::vector<Index> flat_;
  std::vector<Index> binom_;  // binom_[a * (k_ + 1) + b] = C(a, b)
};

/// Sign of sorting a sequence of distinct indices; 0 if two coincide.
int sort_sign(std::vector<Index>& seq);

/// Sparse linear combination of basis vectors.
using LinComb = std::vector<std::pair<Index, Rat>>;

LinComb lincomb_of(const RatMatrix& m, Index column);

/**
 * Expands an alternating multilinear expression whose arguments are linear
 * combinations of basis vectors: calls emit(rank, coeff) once per increasing
 * tuple term, where the value equals sum coeff * w(tuple).
 */
void expand_alternating(const TupleIndex& idx, std::span<const LinComb> args,
                        const std::function<void(Index, const Rat&)>& emit);

}  // namespace lie2
