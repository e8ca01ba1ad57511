#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace negrules::detail {

inline std::size_t chunk_count(std::size_t count, unsigned workers) noexcept {
  if (count == 0) return 0;
  return std::clamp<std::size_t>(workers, 1, count);
}

/// Runs body(chunk, begin, end) over chunk_count(count, workers) contiguous
/// chunks of [0, count). Chunk boundaries depend only on `count` and
/// `workers`; callers write into per-chunk slots and merge in chunk order,
/// so results never depend on scheduling.
template <class Body>
void parallel_chunks(std::size_t count, unsigned workers, Body&& body) {
  const std::size_t chunks = chunk_count(count, workers);
  if (chunks == 0) return;
  const std::size_t step = (count + chunks - 1) / chunks;
  if (chunks == 1) {
    body(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> pool;
    pool.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
      const std::size_t begin = std::min(count, c * step);
      const std::size_t end = std::min(count, begin + step);
      pool.emplace_back([&, c, begin, end] {
        try {
          body(c, begin, end);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace negrules::detail
