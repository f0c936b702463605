#pragma once

#include <functional>

namespace chemofront::exec {

/// Sets the worker count for parallel_rows. Clamped to [1, 64]. Safe to call
/// between runs; not concurrently with parallel_rows.
void set_threads(int n);

int threads();

/// Calls fn(j0, j1) on contiguous row bands covering [0, nrows). Bands are
/// assigned by a fixed partition, but fn must produce output that does not
/// depend on the split: each output row may read only pre-call state.
void parallel_rows(int nrows, const std::function<void(int, int)>& fn);

}  // namespace chemofront::exec
