#pragma once

#include "detmult/arith.hpp"
#include "detmult/partitions.hpp"

#include <span>

namespace detmult {

/// Dimension of the Schur module S_lambda V, dim V = lambda.length():
/// prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i).
BigInteger weyl_dimension(const DominantWeight& lambda);

/// Same product on raw entries; throws DomainError unless weakly decreasing.
BigInteger weyl_dimension(std::span<const long> lambda);

/// lambda + (c^N). Leaves the Weyl dimension unchanged.
DominantWeight shift(const DominantWeight& lambda, long c);

/// lambda(s) = (lambda_1..lambda_s, (s-n)^{m-n}, lambda_{s+1}+(m-n), ..., lambda_n+(m-n))
/// for lambda of length n < m. Requires lambda_s >= s-n and lambda_{s+1} <= s-m
/// (whichever of those entries exist).
DominantWeight lambda_s(const DominantWeight& lambda, int s, int m);

}  // namespace detmult
