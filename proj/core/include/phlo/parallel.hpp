#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace phlo {

// Thread count from PHLO_THREADS (>=1), else hardware concurrency.
int default_threads();

// Runs fn(chunk_begin, chunk_end, chunk_id) over fixed-size chunks. The chunk
// decomposition never depends on the thread count, so per-chunk results can be
// combined in chunk order to give byte-identical output for any thread count.
void for_each_chunk(std::size_t n, int threads,
                    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

inline constexpr std::size_t kChunkSize = 4096;

inline std::size_t chunk_count(std::size_t n) { return (n + kChunkSize - 1) / kChunkSize; }

// Deterministic sum: Kahan within each chunk, sequential combine in chunk order.
template <class Fn>
double sum_chunked(std::size_t n, int threads, Fn&& term) {
  std::vector<double> partial(chunk_count(n), 0.0);
  for_each_chunk(n, threads, [&](std::size_t b, std::size_t e, std::size_t cid) {
    double s = 0.0, c = 0.0;
    for (std::size_t i = b; i < e; ++i) {
      double y = term(i) - c;
      double t = s + y;
      c = (t - s) - y;
      s = t;
    }
    partial[cid] = s;
  });
  double s = 0.0, c = 0.0;
  for (double v : partial) {
    double y = v - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

// Deterministic max over term(i); returns 0 for n == 0.
template <class Fn>
double max_chunked(std::size_t n, int threads, Fn&& term) {
  if (n == 0) return 0.0;
  std::vector<double> partial(chunk_count(n), 0.0);
  for_each_chunk(n, threads, [&](std::size_t b, std::size_t e, std::size_t cid) {
    double m = 0.0;
    for (std::size_t i = b; i < e; ++i) m = std::max(m, term(i));
    partial[cid] = m;
  });
  double m = 0.0;
  for (double v : partial) m = std::max(m, v);
  return m;
}

}  // namespace phlo
