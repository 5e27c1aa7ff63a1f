#include "phlo/parallel.hpp"

#include <cstdlib>
#include <string>

namespace phlo {

int default_threads() {
  if (const char* env = std::getenv("PHLO_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (...) {
    }
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

void for_each_chunk(std::size_t n, int threads,
                    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  std::size_t chunks = chunk_count(n);
  if (threads <= 1 || chunks == 1) {
    for (std::size_t cid = 0; cid < chunks; ++cid) {
      std::size_t b = cid * kChunkSize;
      fn(b, std::min(n, b + kChunkSize), cid);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t cid = next.fetch_add(1);
      if (cid >= chunks) return;
      std::size_t b = cid * kChunkSize;
      fn(b, std::min(n, b + kChunkSize), cid);
    }
  };
  std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(threads), chunks);
  std::vector<std::thread> pool;
  pool.reserve(nthreads - 1);
  for (std::size_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace phlo
