#ifndef IDP_PARALLEL_HPP_
#define IDP_PARALLEL_HPP_

#include <functional>
#include <thread>
#include <vector>

namespace idp {

/// Deterministic parallel-for over [0, n): fixed contiguous chunking, disjoint
/// writes only — reductions stay with the caller in serial index order.
inline void parallel_for(int n, int threads,
                         const std::function<void(int)>& body) {
  if (threads <= 1 || n < 2 * threads) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  const int chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int lo = t * chunk;
    const int hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (int i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace idp

#endif  // IDP_PARALLEL_HPP_
