#pragma once

#include <functional>

namespace flagwalk {

// Worker count honouring FLAGWALK_THREADS (0 or unset = hardware concurrency).
int thread_limit();

// Runs fn(0..n-1), possibly across threads. Callers get determinism by
// writing into pre-sized per-index slots.
void parallel_for(int n, const std::function<void(int)>& fn);

} // namespace flagwalk
