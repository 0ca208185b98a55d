#include "lie2/tuples.hpp"

namespace lie2 {

Index binomial(Index n, Index k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Index r = 1;
  for (Index i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TupleIndex::TupleIndex(Index n, Index k) : n_(n), k_(k), size_(binomial(n, k)) {
  binom_.assign(static_cast<std::size_t>((n + 1) * (k + 1)), 0);
  for (Index a = 0; a <= n; ++a)
    for (Index b = 0; b <= k; ++b) binom_[a * (k + 1) + b] = binomial(a, b);
  flat_.reserve(static_cast<std::size_t>(size_ * k));
  if (size_ == 0) return;
  std::vector<Index> t(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) t[i] = i;
  while (true) {
    flat_.insert(flat_.end(), t.begin(), t.end());
    Index i = k - 1;
    while (i >= 0 && t[i] == n - k + i) --i;
    if (i < 0) break;
    ++t[i];
    for (Index j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
}

Index TupleIndex::rank(std::span<const Index> t) const {
  // Count tuples that precede t lexicographically.
  Index r = 0, prev = -1;
  for (Index i = 0; i < k_; ++i) {
    for (Index v = prev + 1; v < t[i]; ++v) r += binom_[(n_ - 1 - v) * (k_ + 1) + (k_ - 1 - i)];
    prev = t[i];
  }
  return r;
}

int sort_sign(std::vector<Index>& seq) {
  int sign = 1;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    for (std::size_t j = i; j > 0 && seq[j - 1] >= seq[j]; --j) {
      if (seq[j - 1] == seq[j]) return 0;
      std::swap(seq[j - 1], seq[j]);
      sign = -sign;
    }
  }
  return sign;
}

LinComb lincomb_of(const RatMatrix& m, Index column) {
  LinComb out;
  for (Index i = 0; i < m.rows(); ++i)
    if (m(i, column) != 0) out.emplace_back(i, m(i, column));
  return out;
}

namespace {

void expand_rec(const TupleIndex& idx, std::span<const LinComb> args, std::size_t pos, std::vector<Index>& chosen,
                const Rat& coeff, const std::function<void(Index, const Rat&)>& emit) {
  if (pos == args.size()) {
    std::vector<Index> t = chosen;
    const int s = sort_sign(t);
    if (s != 0) emit(idx.rank(t), s > 0 ? coeff : Rat(-coeff));
    return;
  }
  for (const auto& [i, c] : args[pos]) {
    if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
    chosen.push_back(i);
    expand_rec(idx, args, pos + 1, chosen, coeff * c, emit);
    chosen.pop_back();
  }
}

}  // namespace

void expand_alternating(const TupleIndex& idx, std::span<const LinComb> args,
                        const std::function<void(Index, const Rat&)>& emit) {
  std::vector<Index> chosen;
  expand_rec(idx, args, 0, chosen, Rat(1), emit);
}

}  // namespace lie2
