#pragma once

#include "lie2/ratmat.hpp"

#include <functional>
#include <vector>

namespace lie2 {

/// Worker count from LIE2_THREADS (default: hardware concurrency, at least 1).
unsigned thread_budget();

/**
 * Builds a sparse matrix by filling triplets for items [0, count) in chunks,
 * possibly on several threads. Chunk outputs are concatenated in order, so the
 * result does not depend on scheduling.
 */
SparseRatMatrix assemble_sparse(Index rows, Index cols, Index count,
                                const std::function<void(Index, Index, std::vector<Triplet>&)>& fill);

}  // namespace lie2
