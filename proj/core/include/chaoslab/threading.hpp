#pragma once

#include <cstddef>
#include <functional>

namespace chaoslab {

// Global worker budget for all parallel loops (set from --threads).
void set_thread_budget(int n);
int thread_budget();

// Run fn(begin, end) over fixed-size chunks of [0, n). The chunking depends
// only on n and grain — never on the worker count — so any map into disjoint
// output slots, and any reduction combined in chunk order, is bit-identical
// for every thread budget.
void parallel_for_chunks(std::size_t n, std::size_t grain,
                         const std::function<void(std::size_t, std::size_t)>& fn);

// Deterministic parallel reduction: sums term(i) over [0, n) with compensated
// accumulation inside fixed chunks, then combines the per-chunk partials in
// chunk order on the calling thread.
double parallel_reduce(std::size_t n, std::size_t grain,
                       const std::function<double(std::size_t)>& term);

}  // namespace chaoslab
