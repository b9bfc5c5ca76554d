#include "detmult/schur.hpp"

#include <algorithm>
#include <string>

namespace detmult {

BigInteger weyl_dimension(std::span<const long> lambda) {
  if (std::adjacent_find(lambda.begin(), lambda.end(), std::less<>{}) != lambda.end())
    throw DomainError("weyl_dimension needs a dominant weight");
  // Every factor lambda_i - lambda_j + j - i is positive for dominant input, and
  // the ratio of the two products is an integer.
  BigInteger num = 1;
  BigInteger den = 1;
  const long n = static_cast<long>(lambda.size());
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      num *= lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] + (j - i);
      den *= j - i;
    }
  }
  return num / den;
}

BigInteger weyl_dimension(const DominantWeight& lambda) { return weyl_dimension(std::span(lambda.entries())); }

DominantWeight shift(const DominantWeight& lambda, long c) {
  std::vector<long> out = lambda.entries();
  for (long& v : out) v += c;
  return DominantWeight(std::move(out));
}

DominantWeight lambda_s(const DominantWeight& lambda, int s, int m) {
  const int n = static_cast<int>(lambda.length());
  if (n < 1 || m <= n) throw DomainError("lambda_s needs m > n >= 1");
  if (s < 0 || s > n) throw DomainError("lambda_s needs 0 <= s <= n");
  if (s >= 1 && lambda[static_cast<std::size_t>(s - 1)] < s - n)
    throw DomainError("lambda_s: lambda_s >= s - n violated for " + lambda.to_string());
  if (s < n && lambda[static_cast<std::size_t>(s)] > s - m)
    throw DomainError("lambda_s: lambda_{s+1} <= s - m violated for " + lambda.to_string());

  std::vector<long> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < s; ++i) out.push_back(lambda[static_cast<std::size_t>(i)]);
  out.insert(out.end(), static_cast<std::size_t>(m - n), static_cast<long>(s - n));
  for (int i = s; i < n; ++i) out.push_back(lambda[static_cast<std::size_t>(i)] + (m - n));
  return DominantWeight(std::move(out));
}

}  // namespace detmult
