#pragma once

#include "detmult/arith.hpp"

#include <limits>
#include <set>
#include <span>
#include <string_view>

namespace detmult {

/// Generic m x n matrix, m > n >= 1, ideal I of maximal minors.
struct GenericParams {
  int m = 0;
  int n = 0;

  /// Validating constructor; throws DomainError unless m > n >= 1.
  static GenericParams make(int m, int n);

  int ring_dimension() const { return m * n; }
  /// The only Ext index with finite nonzero length: n(m-n)+1.
  int finite_ext_index() const { return n * (m - n) + 1; }
  /// Its local cohomology counterpart mn - (n(m-n)+1) = n^2 - 1.
  int finite_local_cohomology_index() const { return n * n - 1; }

  friend bool operator==(const GenericParams&, const GenericParams&) = default;
};

enum class LengthClassification { zero, finite_nonzero, infinite };

std::string_view to_string(LengthClassification c);

/// Degrees j with Ext^j(S/I^d, S) != 0, decided from the weight restrictions:
/// for each (z, l) = ((c^n), n-1), c < d, and each s in 0..n-1, the set
/// W((c^n), n-1, (n-1), s) is nonempty iff a weakly decreasing chain satisfies
/// lambda_n = n-1-c-m, lambda_s >= s-n, lambda_{s+1} <= s-m.
std::set<int> ext_nonvanishing_degrees(const GenericParams& params, int d);

LengthClassification ext_length_classification(const GenericParams& params, int j, int d);

/// Length of Ext^{n(m-n)+1}(I^{d-1}/I^d, S):
///   sum over d-n >= eps_1 >= ... >= eps_{n-1} >= 0 of
///   dim S_{(eps,0)} C^n * dim S_{((d-n)^{m-n}, eps, 0)} C^m.
/// Zero for d < n. jobs = 0 means one worker per hardware thread.
BigInteger slice_length(const GenericParams& params, int d, unsigned jobs = 1);

/// Length of Ext^{n(m-n)+1}(S/I^D, S) = sum_{d=n}^{D} slice_length(d).
BigInteger cumulative_length(const GenericParams& params, int D, unsigned jobs = 1);

/// Local duality index map j -> mn - j.
int local_cohomology_index(const GenericParams& params, int j_ext);

namespace detail {

/// Whether a weakly decreasing integer vector with lo[i] <= v[i] <= hi[i]
/// exists. Missing bounds are passed as the sentinels below.
bool decreasing_chain_feasible(std::span<const long> lo, std::span<const long> hi);

inline constexpr long kNoLowerBound = std::numeric_limits<long>::min();
inline constexpr long kNoUpperBound = std::numeric_limits<long>::max();

}  // namespace detail

}  // namespace detmult
