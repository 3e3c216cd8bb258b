#ifndef HCP_PARALLEL_HPP
#define HCP_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace hcp {

/// Worker count used by the data-parallel sweeps. Resolution order:
/// set_thread_count() > HCP_THREADS environment variable > hardware
/// concurrency. Results never depend on the count.
int thread_count();
void set_thread_count(int count);

/// Runs fn(begin_i, end_i) on disjoint contiguous subranges of [begin,end)
/// across thread_count() workers. fn must only write to state owned by its
/// subrange.
void parallel_for_ranges(uint64_t begin, uint64_t end,
                         const std::function<void(uint64_t, uint64_t)>& fn);

}  // namespace hcp

#endif
