#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detmult/ext_pfaffian.hpp"
#include "detmult/schur.hpp"
#include "oracles.hpp"

using namespace detmult;

TEST_CASE("params") {
  CHECK_THROWS_AS(PfaffianParams::make(0), DomainError);
  const auto p = PfaffianParams::make(3);
  CHECK(p.ring_dimension() == 21);
  CHECK(p.finite_ext_index() == 7);
  CHECK(p.finite_local_cohomology_index() == 14);
}

TEST_CASE("t vectors") {
  // z2 = (c^{2n}, 0): t_2 = t_1 = n-1 and t_3 >= n-1-c/2.
  const auto p = PfaffianParams::make(2);
  CHECK(pf_t_vectors(p, 0) == std::vector<std::vector<int>>{{1, 1, 1}});
  CHECK(pf_t_vectors(p, 2) == std::vector<std::vector<int>>{{1, 1, 1}, {1, 1, 0}});
  CHECK(pf_t_vectors(PfaffianParams::make(3), 3) == std::vector<std::vector<int>>{{2, 2, 2}, {2, 2, 1}});
}

TEST_CASE("nonvanishing degrees") {
  for (int d = 1; d <= 5; ++d) CHECK(pf_nonvanishing_degrees(PfaffianParams::make(1), d) == std::set<int>{3});
  CHECK(pf_nonvanishing_degrees(PfaffianParams::make(2), 3) == std::set<int>{3, 5});
  CHECK(pf_nonvanishing_degrees(PfaffianParams::make(2), 2) == std::set<int>{3});
}

TEST_CASE("nonvanishing degrees are odd and in range") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 10; ++d)
      for (int j : pf_nonvanishing_degrees(PfaffianParams::make(n), d)) {
        CHECK(j % 2 == 1);
        CHECK(j >= 3);
        CHECK(j <= 2 * n + 1);
      }
}

TEST_CASE("classification") {
  const auto p = PfaffianParams::make(2);
  CHECK(pf_length_classification(p, 5, 3) == LengthClassification::finite_nonzero);
  CHECK(pf_length_classification(p, 3, 3) == LengthClassification::infinite);
  CHECK(pf_length_classification(p, 4, 3) == LengthClassification::zero);
  CHECK(pf_length_classification(p, 5, 2) == LengthClassification::zero);
}

TEST_CASE("slice examples") {
  for (int d = 1; d <= 12; ++d) {
    CHECK(pf_slice_length(PfaffianParams::make(1), d) == d * (d + 1) / 2);
    CHECK(pf_slice_length(PfaffianParams::make(1), d) == oracle::count_monomials(3, d - 1));
  }
  CHECK(pf_slice_length(PfaffianParams::make(2), 3) == 1);
  CHECK(pf_slice_length(PfaffianParams::make(2), 2) == 0);
  CHECK(weyl_dimension(PfaffianWeightSlice{3, {0}}.weight(PfaffianParams::make(2))) == 1);
}

TEST_CASE("slice lengths frozen from an independent rational enumeration") {
  const std::vector<long> n2{1, 15, 110, 546};
  const std::vector<long> n3{1, 63, 1652, 25740};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(pf_slice_length(PfaffianParams::make(2), 3 + static_cast<int>(i)) == n2[i]);
    CHECK(pf_slice_length(PfaffianParams::make(3), 5 + static_cast<int>(i)) == n3[i]);
  }
}

TEST_CASE("cumulative") {
  CHECK(pf_cumulative_length(PfaffianParams::make(2), 3) == 1);
  CHECK(pf_cumulative_length(PfaffianParams::make(1), 3) == 10);
  CHECK(pf_cumulative_length(PfaffianParams::make(2), 2) == 0);
}

TEST_CASE("telescoping, floor, parallel agreement") {
  for (int n = 1; n <= 3; ++n) {
    const auto p = PfaffianParams::make(n);
    for (int d = 2; d <= 10; ++d)
      CHECK(pf_slice_length(p, d) == pf_cumulative_length(p, d) - pf_cumulative_length(p, d - 1));
    for (int d = 1; d <= 10; ++d) CHECK(pf_slice_length(p, d, 3) == pf_slice_length(p, d, 1));
  }
  for (int n = 1; n <= 4; ++n) {
    const auto p = PfaffianParams::make(n);
    for (int d = 1; d < 2 * n - 1; ++d) CHECK(pf_slice_length(p, d) == 0);
    CHECK(pf_slice_length(p, 2 * n - 1) == 1);
  }
}

TEST_CASE("slice weights are dominant with doubled pairs") {
  const auto p = PfaffianParams::make(3);
  for (int d = 5; d <= 9; ++d)
    for (long e1 = 0; e1 <= d + 1 - 6; ++e1)
      for (long e2 = 0; e2 <= e1; ++e2) {
        const DominantWeight w = PfaffianWeightSlice{d, {e1, e2}}.weight(p);
        REQUIRE(w.length() == 7);
        for (std::size_t i = 0; i + 1 < w.length(); i += 2) CHECK(w[i] == w[i + 1]);
        CHECK(w[6] == 6);
      }
  CHECK_THROWS_AS(PfaffianWeightSlice({5, {0}}).weight(p), DomainError);
}

TEST_CASE("polynomiality") {
  for (int n = 1; n <= 2; ++n) {
    const auto p = PfaffianParams::make(n);
    const int k = p.ring_dimension();
    const int d0 = 2 * n - 1;
    std::vector<std::pair<long, Rational>> nodes;
    for (int d = d0; d < d0 + k; ++d) nodes.emplace_back(d, Rational(pf_slice_length(p, d)));
    const RationalPolynomial f = interpolate(nodes);
    CHECK(f.degree() == k - 1);
    for (int d = d0 + k; d <= d0 + k + 1; ++d) CHECK(f(static_cast<long>(d)) == Rational(pf_slice_length(p, d)));
  }
}

TEST_CASE("local cohomology index") {
  CHECK(pf_local_cohomology_index(PfaffianParams::make(2), 5) == 5);
  CHECK(pf_local_cohomology_index(PfaffianParams::make(3), 7) == 14);
  CHECK(pf_local_cohomology_index(PfaffianParams::make(2), 0) == 10);
  CHECK_THROWS_AS(pf_local_cohomology_index(PfaffianParams::make(2), 11), DomainError);
}
