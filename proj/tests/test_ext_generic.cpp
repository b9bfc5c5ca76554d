#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detmult/ext_generic.hpp"
#include "oracles.hpp"

using namespace detmult;

TEST_CASE("params validation") {
  CHECK_THROWS_AS(GenericParams::make(2, 2), DomainError);
  CHECK_THROWS_AS(GenericParams::make(3, 0), DomainError);
  const auto p = GenericParams::make(4, 3);
  CHECK(p.ring_dimension() == 12);
  CHECK(p.finite_ext_index() == 4);
  CHECK(p.finite_local_cohomology_index() == 8);
}

TEST_CASE("decreasing chain feasibility") {
  using detail::kNoLowerBound;
  using detail::kNoUpperBound;
  const std::vector<long> lo{kNoLowerBound, 5}, hi{4, kNoUpperBound};
  CHECK_FALSE(detail::decreasing_chain_feasible(lo, hi));
  const std::vector<long> lo2{kNoLowerBound, 3}, hi2{4, 3};
  CHECK(detail::decreasing_chain_feasible(lo2, hi2));
}

TEST_CASE("nonvanishing degrees") {
  CHECK(ext_nonvanishing_degrees(GenericParams::make(4, 3), 3) == std::set<int>{2, 3, 4});
  CHECK(ext_nonvanishing_degrees(GenericParams::make(5, 3), 3) == std::set<int>{3, 5, 7});
  CHECK_FALSE(ext_nonvanishing_degrees(GenericParams::make(3, 2), 1).contains(3));
  // Below d = n the top degree is missing and some intermediate ones may be too.
  CHECK(ext_nonvanishing_degrees(GenericParams::make(4, 3), 1) == std::set<int>{2});
  CHECK(ext_nonvanishing_degrees(GenericParams::make(4, 3), 2) == std::set<int>{2, 3});
  CHECK(ext_nonvanishing_degrees(GenericParams::make(5, 1), 1) == std::set<int>{5});
}

TEST_CASE("degree sets satisfy the divisibility criterion for d >= n") {
  for (int n = 1; n <= 3; ++n)
    for (int m = n + 1; m <= 6; ++m) {
      const auto p = GenericParams::make(m, n);
      for (int d = n; d <= 8; ++d)
        for (int j : ext_nonvanishing_degrees(p, d)) {
          CHECK((1 - j) % (m - n) == 0);
          CHECK(j >= 2);
          CHECK(j <= p.finite_ext_index());
        }
    }
}

TEST_CASE("length classification") {
  const auto p43 = GenericParams::make(4, 3);
  CHECK(ext_length_classification(p43, 4, 3) == LengthClassification::finite_nonzero);
  CHECK(ext_length_classification(p43, 3, 3) == LengthClassification::infinite);
  CHECK(ext_length_classification(p43, 5, 3) == LengthClassification::zero);
  CHECK(ext_length_classification(GenericParams::make(3, 2), 3, 1) == LengthClassification::zero);
  CHECK(to_string(LengthClassification::finite_nonzero) == "finite-nonzero");
}

TEST_CASE("slice_length examples") {
  const auto p = GenericParams::make(3, 2);
  CHECK(slice_length(p, 2) == 1);
  CHECK(slice_length(p, 3) == 9);
  CHECK(slice_length(p, 1) == 0);
  CHECK_THROWS_AS(slice_length(p, 0), DomainError);
}

TEST_CASE("slice lengths frozen from an independent rational enumeration") {
  const std::vector<std::pair<GenericParams, std::vector<long>>> table{
      {GenericParams::make(3, 2), {1, 9, 40, 125}},
      {GenericParams::make(4, 2), {1, 14, 90, 385}},
      {GenericParams::make(4, 3), {1, 34, 455, 3626}},
      {GenericParams::make(5, 3), {1, 55, 1120, 12936}},
  };
  for (const auto& [p, values] : table)
    for (std::size_t i = 0; i < values.size(); ++i) CHECK(slice_length(p, p.n + static_cast<int>(i)) == values[i]);
}

TEST_CASE("parallel fan-out gives the same value") {
  const auto p = GenericParams::make(5, 3);
  for (int d = 1; d <= 14; ++d) CHECK(slice_length(p, d, 4) == slice_length(p, d, 1));
  CHECK(slice_length(GenericParams::make(6, 4), 12, 0) == slice_length(GenericParams::make(6, 4), 12, 1));
}

TEST_CASE("cumulative_length") {
  const auto p = GenericParams::make(3, 2);
  CHECK(cumulative_length(p, 2) == 1);
  CHECK(cumulative_length(p, 3) == 10);
  CHECK(cumulative_length(p, 1) == 0);
}

TEST_CASE("telescoping, floor and monotonicity") {
  for (int n = 1; n <= 3; ++n)
    for (int m = n + 1; m <= 6; ++m) {
      const auto p = GenericParams::make(m, n);
      CAPTURE(m);
      CAPTURE(n);
      for (int d = 2; d <= 8; ++d) CHECK(slice_length(p, d) == cumulative_length(p, d) - cumulative_length(p, d - 1));
      for (int d = 1; d < n; ++d) CHECK(slice_length(p, d) == 0);
      CHECK(slice_length(p, n) >= 1);
      for (int d = n; d < 8; ++d) CHECK(slice_length(p, d) <= slice_length(p, d + 1));
    }
}

TEST_CASE("n = 1 slices count monomials") {
  // I is the ideal of all m variables; I^{d-1}/I^d has one basis element per degree-(d-1) monomial.
  for (int m = 2; m <= 6; ++m)
    for (int d = 1; d <= 10; ++d) {
      CHECK(slice_length(GenericParams::make(m, 1), d) == oracle::count_monomials(m, d - 1));
      CHECK(slice_length(GenericParams::make(m, 1), d) == binomial(d + m - 2, m - 1));
    }
}

TEST_CASE("polynomiality of the slice lengths") {
  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 2}, {4, 3}}) {
    const auto p = GenericParams::make(m, n);
    const int k = p.ring_dimension();
    std::vector<std::pair<long, Rational>> nodes;
    for (int d = n; d < n + k; ++d) nodes.emplace_back(d, Rational(slice_length(p, d)));
    const RationalPolynomial f = interpolate(nodes);
    CHECK(f.degree() == k - 1);
    for (int d = n + k; d <= n + k + 1; ++d) CHECK(f(static_cast<long>(d)) == Rational(slice_length(p, d)));
  }
}

TEST_CASE("local cohomology index") {
  CHECK(local_cohomology_index(GenericParams::make(4, 3), 4) == 8);
  CHECK(local_cohomology_index(GenericParams::make(3, 2), 3) == 3);
  CHECK(local_cohomology_index(GenericParams::make(3, 2), 0) == 6);
  CHECK_THROWS_AS(local_cohomology_index(GenericParams::make(3, 2), 7), DomainError);
  CHECK_THROWS_AS(local_cohomology_index(GenericParams::make(3, 2), -1), DomainError);
}
