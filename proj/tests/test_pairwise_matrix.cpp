#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "pcmc/errors.hpp"
#include "pcmc/pairwise_matrix.hpp"

using namespace pcmc;

TEST_CASE("from_upper_triangle completes reciprocally") {
  const auto a = from_upper_triangle(3, {2, 4, 2});
  const PairwiseMatrix expected{{1, 2, 4}, {0.5, 1, 2}, {0.25, 0.5, 1}};
  CHECK(a == expected);

  const auto ones = from_upper_triangle(3, {1, 1, 1});
  CHECK(ones == PairwiseMatrix(3));
}

TEST_CASE("from_upper_triangle rejects bad input") {
  CHECK_THROWS_AS(from_upper_triangle(3, {2, 4, -1}), InvalidEntryError);
  CHECK_THROWS_AS(from_upper_triangle(3, {2, 0, 1}), InvalidEntryError);
  CHECK_THROWS_AS(from_upper_triangle(3, {2, 4}), ShapeError);
  CHECK_THROWS_AS(from_upper_triangle(8, std::vector<double>(28, 1.0)), ShapeError);
}

TEST_CASE("from_weights builds quotient matrices") {
  CHECK(from_weights(std::vector<double>{4, 2, 1}) ==
        PairwiseMatrix{{1, 2, 4}, {0.5, 1, 2}, {0.25, 0.5, 1}});
  CHECK(from_weights(std::vector<double>{3.7, 3.7, 3.7, 3.7}) == PairwiseMatrix(4));

  const auto a = from_weights(std::vector<double>{1, 2, 4, 8});
  CHECK(a(0, 3) == 0.125);
  CHECK(a(0, 2) * a(2, 3) == doctest::Approx(a(0, 3)).epsilon(1e-15));

  CHECK_THROWS_AS(from_weights(std::vector<double>{1, 0, 2}), InvalidEntryError);
  CHECK_THROWS_AS(from_weights(std::vector<double>{1, -2, 2}), InvalidEntryError);
}

TEST_CASE("hand-built matrices validate shape and sign") {
  CHECK_THROWS_AS((PairwiseMatrix{{1, 2}, {1}}), ShapeError);
  CHECK_THROWS_AS((PairwiseMatrix{{1, -2}, {0.5, 1}}), InvalidEntryError);
}

TEST_CASE("is_reciprocal") {
  CHECK(is_reciprocal(from_upper_triangle(4, {2, 3, 5, 7, 0.5, 1.5}), 1e-12));
  CHECK_FALSE(is_reciprocal(PairwiseMatrix{{1, 2}, {3, 1}}, 1e-12));
  CHECK(is_reciprocal(PairwiseMatrix(5), 1e-12));
  CHECK_FALSE(is_reciprocal(PairwiseMatrix{{2, 1}, {1, 0.5}}, 1e-12));
}

TEST_CASE("is_consistent") {
  CHECK(is_consistent(from_weights(std::vector<double>{4, 2, 1}), 1e-12));
  CHECK_FALSE(is_consistent(from_upper_triangle(3, {2, 8, 2}), 1e-9));
  CHECK(is_consistent(from_upper_triangle(3, {3, 15, 5}), 1e-12));
}

TEST_CASE("triads enumerates lexicographically") {
  const auto t3 = triads(3);
  REQUIRE(t3.size() == 1);
  CHECK(t3[0] == Triad{0, 1, 2});
  CHECK(triads(4).size() == 4);
  CHECK(triads(7).size() == 35);
  CHECK_THROWS_AS(triads(2), ShapeError);

  for (std::size_t n = 3; n <= kMaxOrder; ++n) {
    const auto ts = triads(n);
    CHECK(ts.size() == n * (n - 1) * (n - 2) / 6);
    for (std::size_t q = 0; q < ts.size(); ++q) {
      CHECK(ts[q].i < ts[q].j);
      CHECK(ts[q].j < ts[q].k);
      CHECK(ts[q].k < n);
      if (q > 0) {
        const auto& p = ts[q - 1];
        const bool increasing = p.i < ts[q].i || (p.i == ts[q].i && (p.j < ts[q].j || (p.j == ts[q].j && p.k < ts[q].k)));
        CHECK(increasing);
      }
    }
  }
}

TEST_CASE("property: quotient matrices are consistent and scale free") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> w(0.01, 100.0);
  std::uniform_real_distribution<double> c(0.001, 1000.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 2 + trial % 6;
    std::vector<double> s(n);
    for (auto& v : s) v = w(gen);
    const auto a = from_weights(s);
    CHECK(is_consistent(a, 1e-9));
    CHECK(is_reciprocal(a, 1e-12));

    const double scale = c(gen);
    std::vector<double> scaled = s;
    for (auto& v : scaled) v *= scale;
    const auto b = from_weights(scaled);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) CHECK(b(i, j) == doctest::Approx(a(i, j)).epsilon(1e-14));
    }
  }
}

TEST_CASE("property: upper triangle round trip") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 3 + trial % 5;
    std::vector<double> upper(n * (n - 1) / 2);
    for (auto& v : upper) v = u(gen);
    const auto a = from_upper_triangle(n, upper);
    CHECK(a.upper_triangle() == upper);
    CHECK(is_reciprocal(a, 1e-12));
  }
}
