#pragma once

#include "detmult/arith.hpp"

#include <algorithm>
#include <future>
#include <span>
#include <thread>
#include <vector>

namespace detmult::detail {

inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Sum of term(eps) over weakly decreasing eps = (eps_1 >= ... >= eps_len >= 0)
/// with eps_1 <= top. With len = 0 the sum has the single term term({}).
/// The outermost value eps_1 is distributed over up to `jobs` workers.
template <typename Term>
BigInteger sum_over_decreasing_tuples(int len, long top, unsigned jobs, const Term& term) {
  if (len == 0) return term(std::span<const long>{});
  if (top < 0) return 0;

  auto run_range = [&](long first, long stride) {
    BigInteger acc = 0;
    std::vector<long> eps(static_cast<std::size_t>(len));
    auto rec = [&](auto&& self, std::size_t pos, long bound) -> void {
      if (pos == eps.size()) {
        acc += term(std::span<const long>(eps));
        return;
      }
      for (long v = 0; v <= bound; ++v) {
        eps[pos] = v;
        self(self, pos + 1, v);
      }
    };
    for (long e1 = first; e1 <= top; e1 += stride) {
      eps[0] = e1;
      rec(rec, 1, e1);
    }
    return acc;
  };

  const long workers = std::min<long>(resolve_jobs(jobs), top + 1);
  if (workers <= 1) return run_range(0, 1);
  std::vector<std::future<BigInteger>> parts;
  for (long w = 0; w < workers; ++w) parts.push_back(std::async(std::launch::async, run_range, w, workers));
  BigInteger total = 0;
  for (auto& part : parts) total += part.get();
  return total;
}

}  // namespace detmult::detail
