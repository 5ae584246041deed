#pragma once

#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace sumrank {

/// Splits [0, total) into one contiguous chunk per worker, evaluates the
/// chunks (possibly on separate threads) and folds the partial results in
/// chunk order. The merge order is fixed by index, so the result does not
/// depend on the number of workers as long as `merge` is associative over
/// adjacent ranges.
template <class T, class ChunkFn, class MergeFn>
T parallel_reduce(uint64_t total, int workers, T init, ChunkFn&& chunk, MergeFn&& merge) {
  if (workers < 1) workers = 1;
  if (total == 0) return init;
  uint64_t nchunks = static_cast<uint64_t>(workers);
  if (nchunks > total) nchunks = total;
  if (nchunks == 1) {
    return merge(std::move(init), chunk(uint64_t{0}, total));
  }
  std::vector<T> parts(nchunks, init);
  std::vector<std::thread> pool;
  pool.reserve(nchunks);
  for (uint64_t i = 0; i < nchunks; ++i) {
    uint64_t begin = total * i / nchunks;
    uint64_t end = total * (i + 1) / nchunks;
    pool.emplace_back([&, i, begin, end] { parts[i] = chunk(begin, end); });
  }
  for (auto& t : pool) t.join();
  T acc = std::move(init);
  for (auto& p : parts) acc = merge(std::move(acc), std::move(p));
  return acc;
}

}  // namespace sumrank
