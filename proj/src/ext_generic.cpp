#include "detmult/ext_generic.hpp"

#include "detmult/schur.hpp"
#include "enumeration.hpp"

#include <limits>
#include <string>

namespace detmult {

GenericParams GenericParams::make(int m, int n) {
  if (n < 1 || m <= n)
    throw DomainError("generic family needs m > n >= 1 (got m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
  return GenericParams{m, n};
}

std::string_view to_string(LengthClassification c) {
  switch (c) {
    case LengthClassification::zero: return "zero";
    case LengthClassification::finite_nonzero: return "finite-nonzero";
    case LengthClassification::infinite: return "infinite";
  }
  return "unknown";
}

namespace detail {

bool decreasing_chain_feasible(std::span<const long> lo, std::span<const long> hi) {
  // Greedy from the bottom: v_i = max(lo_i, v_{i+1}) is the least admissible value.
  long floor = kNoLowerBound;
  for (std::size_t i = lo.size(); i-- > 0;) {
    floor = std::max(floor, lo[i]);
    if (floor > hi[i]) return false;
  }
  return true;
}

}  // namespace detail

std::set<int> ext_nonvanishing_degrees(const GenericParams& params, int d) {
  const auto [m, n] = GenericParams::make(params.m, params.n);
  if (d < 1) throw DomainError("power d must be >= 1");
  const int l = n - 1;
  const int t = n - 1;  // t = (t_1) with t_{n-l} = l
  std::set<int> degrees;
  for (int c = 0; c < d; ++c) {
    for (int s = 0; s <= t; ++s) {
      std::vector<long> lo(static_cast<std::size_t>(n), detail::kNoLowerBound);
      std::vector<long> hi(static_cast<std::size_t>(n), detail::kNoUpperBound);
      const long last = n - 1 - c - m;
      lo.back() = std::max(lo.back(), last);
      hi.back() = std::min(hi.back(), last);
      if (s >= 1) lo[static_cast<std::size_t>(s - 1)] = std::max(lo[static_cast<std::size_t>(s - 1)], static_cast<long>(s - n));
      if (s < n) hi[static_cast<std::size_t>(s)] = std::min(hi[static_cast<std::size_t>(s)], static_cast<long>(s - m));
      if (!detail::decreasing_chain_feasible(lo, hi)) continue;
      degrees.insert(m * n - l * l - s * (m - n) - 2 * t);
    }
  }
  return degrees;
}

LengthClassification ext_length_classification(const GenericParams& params, int j, int d) {
  if (!ext_nonvanishing_degrees(params, d).contains(j)) return LengthClassification::zero;
  if (j == params.finite_ext_index() && d >= params.n) return LengthClassification::finite_nonzero;
  return LengthClassification::infinite;
}

BigInteger slice_length(const GenericParams& params, int d, unsigned jobs) {
  const auto [m, n] = GenericParams::make(params.m, params.n);
  if (d < 1) throw DomainError("power d must be >= 1");
  if (d < n) return 0;
  const long top = d - n;
  return detail::sum_over_decreasing_tuples(n - 1, top, jobs, [m, n, top](std::span<const long> eps) {
    std::vector<long> small(eps.begin(), eps.end());
    small.push_back(0);
    std::vector<long> large(static_cast<std::size_t>(m - n), top);
    large.insert(large.end(), small.begin(), small.end());
    return weyl_dimension(std::span<const long>(small)) * weyl_dimension(std::span<const long>(large));
  });
}

BigInteger cumulative_length(const GenericParams& params, int D, unsigned jobs) {
  if (D < 1) throw DomainError("power D must be >= 1");
  BigInteger total = 0;
  for (int d = params.n; d <= D; ++d) total += slice_length(params, d, jobs);
  return total;
}

int local_cohomology_index(const GenericParams& params, int j_ext) {
  const int dim = params.ring_dimension();
  if (j_ext < 0 || j_ext > dim)
    throw DomainError("Ext index " + std::to_string(j_ext) + " outside [0, " + std::to_string(dim) + "]");
  return dim - j_ext;
}

}  // namespace detmult
