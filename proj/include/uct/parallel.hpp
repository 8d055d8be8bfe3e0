#pragma once

#include <cstddef>
#include <functional>

namespace uct {

/// Upper bound on worker threads used by the library. 0 selects the hardware concurrency.
void set_thread_count(unsigned threads) noexcept;
unsigned thread_count() noexcept;

/// Runs body(i) for every i in [begin, end) using up to thread_count() workers.
/// Indices are handed out in contiguous chunks; body must only write to state owned by i.
void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& body);

}  // namespace uct
