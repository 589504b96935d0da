#pragma once

#include <functional>

namespace glnc {

// Worker count from CONVERSE_THREADS (the engine's only environment
// coupling); defaults to 1.  Clamped to [1, 64].
int configured_threads();

// Runs fn(worker, begin, end) over contiguous chunks of [0, total).  Workers
// must write to disjoint slots (or thread-local state merged afterwards in
// worker order) so results stay byte-identical for every thread count.
void parallel_chunks(long total, const std::function<void(int, long, long)>& fn);

}  // namespace glnc
