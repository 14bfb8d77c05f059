#ifndef QION_PARALLEL_HPP
#define QION_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace qion {

// Runs fn(i) for i in [0, n). Work is split into contiguous index blocks,
// one per thread; results must be written to disjoint pre-allocated slots so
// aggregation is independent of the execution order.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

} // namespace qion

#endif
