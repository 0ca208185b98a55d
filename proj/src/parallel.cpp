#include "lie2/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <thread>

namespace lie2 {

unsigned thread_budget() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LIE2_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  return hw;
}

SparseRatMatrix assemble_sparse(Index rows, Index cols, Index count,
                                const std::function<void(Index, Index, std::vector<Triplet>&)>& fill) {
  const Index workers = std::min<Index>(thread_budget(), std::max<Index>(1, count / 16));
  std::vector<std::vector<Triplet>> parts(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  auto run = [&](Index w) {
    try {
      const Index lo = count * w / workers, hi = count * (w + 1) / workers;
      fill(lo, hi, parts[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (Index w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Triplet> all;
  for (auto& p : parts) all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  SparseRatMatrix m(rows, cols);
  m.setFromTriplets(all.begin(), all.end());
  m.prune([](Index, Index, const Rat& v) { return v != 0; });
  return m;
}

}  // namespace lie2
