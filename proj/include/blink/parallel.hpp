#pragma once

#include <cstddef>
#include <functional>

namespace blink {

/// Number of workers to use when the caller asks for 0 ("all cores").
std::size_t resolve_threads(std::size_t requested) noexcept;

/// Splits [0, count) into contiguous chunks and runs fn(begin, end) on up to
/// `threads` workers. Chunk boundaries depend only on count and threads.
/// The first exception thrown by any worker is rethrown after all join.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t, std::size_t)>& fn);

/// Dynamic scheduling over single indices, for uneven per-item cost.
void parallel_for_each(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn);

}  // namespace blink
