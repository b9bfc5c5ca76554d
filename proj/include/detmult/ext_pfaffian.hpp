#pragma once

#include "detmult/arith.hpp"
#include "detmult/ext_generic.hpp"
#include "detmult/partitions.hpp"

#include <set>
#include <vector>

namespace detmult {

/// Skew-symmetric (2n+1) x (2n+1) matrix, ideal Pf of its 2n x 2n pfaffians.
struct PfaffianParams {
  int n = 0;

  static PfaffianParams make(int n);

  int matrix_size() const { return 2 * n + 1; }
  /// C(2n+1, 2) = 2n^2 + n.
  int ring_dimension() const { return 2 * n * n + n; }
  int finite_ext_index() const { return 2 * n + 1; }
  /// (2n^2 + n) - (2n + 1) = 2n^2 - n - 1.
  int finite_local_cohomology_index() const { return 2 * n * n - n - 1; }

  friend bool operator==(const PfaffianParams&, const PfaffianParams&) = default;
};

/// The weight lambda(d, eps) = (d+1, d+1, 2n+eps_1, 2n+eps_1, ..., 2n+eps_{n-1}, 2n+eps_{n-1}, 2n)
/// indexing one summand of Ext^{2n+1}(Pf^{d-1}/Pf^d, S).
struct PfaffianWeightSlice {
  int d = 0;
  std::vector<long> epsilon;

  DominantWeight weight(const PfaffianParams& params) const;
};

/// T_l(z) for z = (c^n), l = n-1 in ambient size 2n+1: vectors
/// (t_1 = l >= t_2 >= t_3 >= 0) with
/// z2_{2l+i} - z2_{2l+i+1} >= 2t_i - 2t_{i+1}, z2 = doubled(z) padded by zeros.
std::vector<std::vector<int>> pf_t_vectors(const PfaffianParams& params, int c);

/// Degrees j = C(2n+1,2) - C(2l,2) - 2 sum t_i over c < d and t in T_l((c^n)).
std::set<int> pf_nonvanishing_degrees(const PfaffianParams& params, int d);

LengthClassification pf_length_classification(const PfaffianParams& params, int j, int d);

/// Length of Ext^{2n+1}(Pf^{d-1}/Pf^d, S): sum of dim S_{lambda(d,eps)} C^{2n+1}
/// over d+1-2n >= eps_1 >= ... >= eps_{n-1} >= 0. Zero for d < 2n-1.
BigInteger pf_slice_length(const PfaffianParams& params, int d, unsigned jobs = 1);

/// sum_{d=2n-1}^{D} pf_slice_length(d).
BigInteger pf_cumulative_length(const PfaffianParams& params, int D, unsigned jobs = 1);

/// j -> (2n^2 + n) - j.
int pf_local_cohomology_index(const PfaffianParams& params, int j_ext);

}  // namespace detmult
