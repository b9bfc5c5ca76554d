#include "detmult/ext_pfaffian.hpp"

#include "detmult/schur.hpp"
#include "enumeration.hpp"

#include <string>

namespace detmult {

PfaffianParams PfaffianParams::make(int n) {
  if (n < 1) throw DomainError("pfaffian family needs n >= 1 (got n=" + std::to_string(n) + ")");
  return PfaffianParams{n};
}

DominantWeight PfaffianWeightSlice::weight(const PfaffianParams& params) const {
  const long n = params.n;
  if (static_cast<long>(epsilon.size()) != n - 1) throw DomainError("pfaffian slice needs n-1 epsilon entries");
  std::vector<long> out{d + 1L, d + 1L};
  for (long e : epsilon) out.insert(out.end(), 2, 2 * n + e);
  out.push_back(2 * n);
  return DominantWeight(std::move(out));
}

std::vector<std::vector<int>> pf_t_vectors(const PfaffianParams& params, int c) {
  const int n = PfaffianParams::make(params.n).n;
  const int size = params.matrix_size();
  const int l = n - 1;
  const int len = size - 2 * l;  // three entries
  const Partition z2 = doubled(Partition(std::vector<int>(static_cast<std::size_t>(n), c)));
  auto z2_at = [&](int one_based) { return z2[static_cast<std::size_t>(one_based - 1)]; };

  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(len));
  t[0] = l;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == len) {
      out.push_back(t);
      return;
    }
    for (int v = t[static_cast<std::size_t>(pos - 1)]; v >= 0; --v) {
      // constraint i = pos (1-based) links t_i and t_{i+1}
      const int gap = z2_at(2 * l + pos) - z2_at(2 * l + pos + 1);
      if (gap < 2 * t[static_cast<std::size_t>(pos - 1)] - 2 * v) continue;
      t[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 1);
  return out;
}

std::set<int> pf_nonvanishing_degrees(const PfaffianParams& params, int d) {
  const int n = PfaffianParams::make(params.n).n;
  if (d < 1) throw DomainError("power d must be >= 1");
  const long size = params.matrix_size();
  const long l = n - 1;
  const long base = size * (size - 1) / 2 - (2 * l) * (2 * l - 1) / 2;
  std::set<int> degrees;
  for (int c = 0; c < d; ++c) {
    for (const auto& t : pf_t_vectors(params, c)) {
      long sum = 0;
      for (int ti : t) sum += ti;
      degrees.insert(static_cast<int>(base - 2 * sum));
    }
  }
  return degrees;
}

LengthClassification pf_length_classification(const PfaffianParams& params, int j, int d) {
  if (!pf_nonvanishing_degrees(params, d).contains(j)) return LengthClassification::zero;
  if (j == params.finite_ext_index() && d >= 2 * params.n - 1) return LengthClassification::finite_nonzero;
  return LengthClassification::infinite;
}

BigInteger pf_slice_length(const PfaffianParams& params, int d, unsigned jobs) {
  const long n = PfaffianParams::make(params.n).n;
  if (d < 1) throw DomainError("power d must be >= 1");
  if (d < 2 * n - 1) return 0;
  return detail::sum_over_decreasing_tuples(static_cast<int>(n - 1), d + 1 - 2 * n, jobs,
                                            [n, d](std::span<const long> eps) {
                                              std::vector<long> lambda{d + 1L, d + 1L};
                                              for (long e : eps) lambda.insert(lambda.end(), 2, 2 * n + e);
                                              lambda.push_back(2 * n);
                                              return weyl_dimension(std::span<const long>(lambda));
                                            });
}

BigInteger pf_cumulative_length(const PfaffianParams& params, int D, unsigned jobs) {
  if (D < 1) throw DomainError("power D must be >= 1");
  BigInteger total = 0;
  for (int d = 2 * params.n - 1; d <= D; ++d) total += pf_slice_length(params, d, jobs);
  return total;
}

int pf_local_cohomology_index(const PfaffianParams& params, int j_ext) {
  const int dim = PfaffianParams::make(params.n).ring_dimension();
  if (j_ext < 0 || j_ext > dim)
    throw DomainError("Ext index " + std::to_string(j_ext) + " outside [0, " + std::to_string(dim) + "]");
  return dim - j_ext;
}

}  // namespace detmult
