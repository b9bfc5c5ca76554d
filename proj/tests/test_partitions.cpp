#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detmult/arith.hpp"
#include "detmult/partitions.hpp"
#include "oracles.hpp"

using namespace detmult;

TEST_CASE("partition construction and equality") {
  CHECK(Partition{2, 1} == Partition{2, 1, 0, 0});
  CHECK(Partition{2, 1}.size() == 3);
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition({1, -1}), DomainError);
  CHECK_THROWS_AS(DominantWeight({0, 1}), DomainError);
  CHECK_NOTHROW(DominantWeight({0, -1, -1}));
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{3, 2, 1}) == Partition{3, 2, 1});
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{0, 0}) == Partition{});
  for (int len = 0; len <= 6; ++len)
    for (const Partition& x : partitions_in_box(len, 6)) CHECK(conjugate(conjugate(x)) == x);
}

TEST_CASE("truncate") {
  CHECK(truncate(Partition{5, 3, 1}, 2).parts() == std::vector<int>{2, 2, 1});
  CHECK(truncate(Partition{5, 3, 1}, 0).parts() == std::vector<int>{0, 0, 0});
  CHECK(truncate(Partition{2, 2}, 9) == Partition{2, 2});
  for (const Partition& x : partitions_in_box(4, 5))
    for (int c = 0; c <= 6; ++c) {
      const Partition t = truncate(x, c);
      CHECK(entrywise_leq(t, x));
      CHECK(t.first() <= c);
    }
}

TEST_CASE("doubled") {
  CHECK(doubled(Partition{3, 1}).parts() == std::vector<int>{3, 3, 1, 1});
  CHECK(doubled(Partition{4}).parts() == std::vector<int>{4, 4});
  CHECK(doubled(Partition{}).length() == 0);
}

TEST_CASE("z_set_member examples") {
  const std::vector<Partition> X = oracle::determinantal_power_set(2, 2, 2);
  REQUIRE(X == std::vector<Partition>{Partition{2, 2}});
  CHECK(z_set_member(X, Partition{1, 1}, 1));
  CHECK_FALSE(z_set_member(X, Partition{1, 1}, 0));
  const std::vector<Partition> single{Partition{1, 0}};
  CHECK(z_set_member(single, Partition{0, 0}, 0));
  CHECK_THROWS_AS(z_set_member(std::vector<Partition>{}, Partition{0}, 0), DomainError);
}

TEST_CASE("z_set_maximal_minors") {
  CHECK(z_set_maximal_minors(2, 2) == std::vector<ZEntry>{{Partition{0, 0}, 1}, {Partition{1, 1}, 1}});
  CHECK(z_set_maximal_minors(1, 3) == std::vector<ZEntry>{{Partition{0}, 0}, {Partition{1}, 0}, {Partition{2}, 0}});
  CHECK(z_set_maximal_minors(3, 1) == std::vector<ZEntry>{{Partition{0, 0, 0}, 2}});
}

TEST_CASE("z_set_closed_form examples") {
  CHECK(z_set_closed_form(2, 2, 2) == z_set_maximal_minors(2, 2));
  const auto entries = z_set_closed_form(2, 1, 3);
  CHECK_FALSE(entries.empty());
  for (const ZEntry& e : entries) CHECK(e.l == 0);
  CHECK(z_set_closed_form(1, 1, 2) == std::vector<ZEntry>{{Partition{0}, 0}, {Partition{1}, 0}});
}

TEST_CASE("Z-set definition agrees with the closed form") {
  for (int n = 1; n <= 4; ++n)
    for (int p = 1; p <= n; ++p)
      for (int d = 1; d <= 5; ++d) {
        CAPTURE(n);
        CAPTURE(p);
        CAPTURE(d);
        const auto X = oracle::determinantal_power_set(n, p, d);
        std::vector<ZEntry> expected;
        for (const Partition& z : partitions_in_box(n, d - 1))
          for (int l = 0; l < n; ++l)
            if (z_set_member(X, z, l)) expected.push_back({z, l});
        std::sort(expected.begin(), expected.end());
        const auto closed = z_set_closed_form(n, p, d);
        CHECK(closed == expected);
        for (const ZEntry& e : closed)
          for (int i = 0; i <= e.l; ++i) CHECK(e.z[static_cast<std::size_t>(i)] == e.z.first());
      }
}

TEST_CASE("Z^d_n coincides with the maximal-minor set") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 6; ++d) CHECK(z_set_closed_form(n, n, d) == z_set_maximal_minors(n, d));
}
