#pragma once

#include <cstddef>
#include <functional>

namespace tailmine {

// Runs fn(i) for i in [begin, end) across up to `threads` workers (0 = one per
// hardware core). Work is split into contiguous index blocks; each index is
// processed exactly once, so results must not depend on thread count.
void parallel_for(std::size_t begin, std::size_t end, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

// Resolved worker count for a requested cap (0 = hardware concurrency).
unsigned resolve_threads(unsigned requested);

} // namespace tailmine
