#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detmult/schur.hpp"
#include "oracles.hpp"

#include <random>

using namespace detmult;

TEST_CASE("weyl_dimension examples") {
  CHECK(weyl_dimension(DominantWeight{1, 0}) == 2);
  CHECK(weyl_dimension(DominantWeight{1, 1, 0}) == 3);
  CHECK(weyl_dimension(DominantWeight{2, 1, 0}) == oracle::count_ssyt({2, 1}, 3));
  CHECK(weyl_dimension(DominantWeight{2, 1, 0}) == 8);
  CHECK(weyl_dimension(DominantWeight{}) == 1);
  const std::vector<long> bad{1, 2};
  CHECK_THROWS_AS(weyl_dimension(std::span<const long>(bad)), DomainError);
}

TEST_CASE("weyl_dimension equals the semistandard tableaux count") {
  for (int N = 1; N <= 4; ++N)
    for (const Partition& x : partitions_in_box(N, 6)) {
      if (x.size() > 6) continue;
      CAPTURE(x.to_string());
      CAPTURE(N);
      std::vector<long> w(x.parts().begin(), x.parts().end());
      CHECK(weyl_dimension(DominantWeight(w)) == oracle::count_ssyt(x.parts(), N));
    }
}

TEST_CASE("shift") {
  CHECK(shift(DominantWeight{0, -1}, 1) == DominantWeight{1, 0});
  CHECK(shift(DominantWeight{-3, -3}, 3) == DominantWeight{0, 0});
  CHECK(shift(DominantWeight{2, 1, 0}, -2) == DominantWeight{0, -1, -2});
}

TEST_CASE("shift invariance and duality neutrality") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> entry(-6, 6), offset(-5, 5), len(1, 5);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<long> w(static_cast<std::size_t>(len(rng)));
    for (long& v : w) v = entry(rng);
    std::sort(w.rbegin(), w.rend());
    const DominantWeight lambda(w);
    CHECK(weyl_dimension(shift(lambda, offset(rng))) == weyl_dimension(lambda));
    std::vector<long> dual(w.rbegin(), w.rend());
    for (long& v : dual) v = -v;
    CHECK(weyl_dimension(DominantWeight(dual)) == weyl_dimension(lambda));
  }
}

TEST_CASE("lambda_s examples") {
  CHECK(lambda_s(DominantWeight{-3, -3}, 0, 3) == DominantWeight{-2, -2, -2});
  CHECK(lambda_s(DominantWeight{-3, -4}, 0, 3) == DominantWeight{-2, -2, -3});
  CHECK(weyl_dimension(lambda_s(DominantWeight{-3, -3}, 0, 3)) == 1);
  // lambda_1 = 0 >= 1-2 and lambda_2 = -3 <= 1-3
  CHECK(lambda_s(DominantWeight{0, -3}, 1, 3) == DominantWeight{0, -1, -2});
  CHECK_THROWS_AS(lambda_s(DominantWeight{0, 0}, 0, 3), DomainError);
  CHECK_THROWS_AS(lambda_s(DominantWeight{-3, -3}, 0, 2), DomainError);
}

TEST_CASE("lambda_s output is dominant and matches the shifted presentation") {
  // The alternative presentation ((-m)^{m-n}, lambda) differs from lambda(0) by a
  // global shift of m-n, so the dimensions agree.
  for (int m = 3; m <= 6; ++m)
    for (int n = 1; n < m; ++n)
      for (int c = 0; c <= 3; ++c)
        for (long top = -m; top >= -m - 3; --top) {
          const long bottom = n - 1 - c - m;
          if (bottom > top) continue;
          std::vector<long> w(static_cast<std::size_t>(n), top);
          w.back() = bottom;
          const DominantWeight lambda(w);
          const DominantWeight out = lambda_s(lambda, 0, m);
          std::vector<long> alt(static_cast<std::size_t>(m - n), -m);
          alt.insert(alt.end(), w.begin(), w.end());
          CHECK(weyl_dimension(out) == weyl_dimension(DominantWeight(alt)));
          CHECK(shift(DominantWeight(alt), m - n) == out);
        }
}
