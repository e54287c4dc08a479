#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace pauli_fwht::detail {

/// Splits [0, count) into contiguous chunks, one per worker, and runs
/// body(begin, end, worker) on each. Returns after every worker has finished.
/// With workers <= 1 the body runs on the calling thread.
template <class Body>
void parallel_chunks(std::size_t count, unsigned workers, Body&& body) {
  const std::size_t used = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
  if (used == 1) {
    body(std::size_t{0}, count, 0u);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(used - 1);
  const std::size_t step = count / used;
  const std::size_t extra = count % used;
  std::size_t begin = 0;
  std::size_t first_end = 0;
  for (unsigned w = 0; w < used; ++w) {
    const std::size_t end = begin + step + (w < extra ? 1 : 0);
    if (w == 0) {
      first_end = end;
    } else {
      pool.emplace_back([&body, begin, end, w] { body(begin, end, w); });
    }
    begin = end;
  }
  body(std::size_t{0}, first_end, 0u);
}

}  // namespace pauli_fwht::detail
