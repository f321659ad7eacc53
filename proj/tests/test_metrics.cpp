#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "pcmc/errors.hpp"
#include "pcmc/metrics.hpp"
#include "pcmc/solvers.hpp"

using namespace pcmc;

namespace {

// Direct long-double summation over all n^2 positions.
double euclid_oracle(const PairwiseMatrix& a, const PairwiseMatrix& b) {
  long double s = 0.0L;
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const long double d = static_cast<long double>(a(i, j)) - b(i, j);
      s += d * d;
    }
  }
  return static_cast<double>(std::sqrt(s) / (n * n));
}

PairwiseMatrix random_reciprocal(std::size_t n, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> logu(std::log(1.0 / 9), std::log(9.0));
  std::vector<double> upper(n * (n - 1) / 2);
  for (auto& v : upper) v = std::exp(logu(gen));
  return from_upper_triangle(n, upper);
}

}  // namespace

TEST_CASE("reconstruct") {
  const SolutionVector s{4.0 / 7, 2.0 / 7, 1.0 / 7};
  const auto r = reconstruct(s);
  const PairwiseMatrix expected{{1, 2, 4}, {0.5, 1, 2}, {0.25, 0.5, 1}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(r(i, j) == doctest::Approx(expected(i, j)).epsilon(1e-15));
  }
  CHECK(reconstruct(SolutionVector{0.25, 0.25, 0.25, 0.25}) == PairwiseMatrix(4));

  const auto c = from_weights(std::vector<double>{5, 1, 3, 2.5});
  const auto back = reconstruct(solve_gm(c));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(back(i, j) - c(i, j)) <= 1e-12);
  }
}

TEST_CASE("distances on the order-3 reference matrix") {
  const auto a = from_upper_triangle(3, {2, 8, 2});
  const auto r = reconstruct(solve_gm(a));
  CHECK(dist_euclid_mod(a, a) == 0.0);
  CHECK(dist_cheb(a, a) == 0.0);
  // 40-digit evaluation of the nine squared differences.
  CHECK(std::abs(dist_euclid_mod(a, r) - 0.2014335424278064480) <= 1e-12);
  CHECK(std::abs(dist_euclid_mod(a, r) - euclid_oracle(a, r)) <= 1e-14);
  CHECK(std::abs(dist_cheb(a, r) - 1.650395792127202101) <= 1e-12);
  CHECK(std::abs(std::abs(a(0, 2) - r(0, 2)) - dist_cheb(a, r)) <= 1e-15);
}

TEST_CASE("distances require equal orders") {
  CHECK_THROWS_AS(dist_euclid_mod(PairwiseMatrix(3), PairwiseMatrix(4)), ShapeError);
  CHECK_THROWS_AS(dist_cheb(PairwiseMatrix(5), PairwiseMatrix(4)), ShapeError);
}

TEST_CASE("property: metric axioms and euclid <= cheb") {
  std::mt19937_64 gen(41);
  for (int t = 0; t < 3000; ++t) {
    const std::size_t n = 3 + t % 5;
    const auto a = random_reciprocal(n, gen);
    const auto b = random_reciprocal(n, gen);
    const auto ab = distances(a, b);
    const auto ba = distances(b, a);
    CHECK(ab.euclid_mod == ba.euclid_mod);
    CHECK(ab.cheb == ba.cheb);
    CHECK(ab.euclid_mod >= 0.0);
    CHECK(ab.euclid_mod <= ab.cheb);
    CHECK(ab.euclid_mod == doctest::Approx(euclid_oracle(a, b)).epsilon(1e-13));
    CHECK(distances(a, a).euclid_mod == 0.0);
    CHECK(distances(a, a).cheb == 0.0);
  }
}

TEST_CASE("property: reconstruction is scale free") {
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> w(0.05, 20.0);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 3 + t % 5;
    std::vector<double> v(n);
    for (auto& x : v) x = w(gen);
    const auto raw = reconstruct(SolutionVector(v));
    const auto normed = reconstruct(normalize(v));
    CHECK(dist_cheb(raw, normed) <= 1e-12 * 400);

    const auto c = from_weights(v);
    CHECK(dist_cheb(c, reconstruct(solve_gm(c))) <= 1e-9);
    CHECK(dist_cheb(c, reconstruct(solve_ev(c).solution)) <= 1e-9);
    CHECK(dist_euclid_mod(c, reconstruct(solve_ev(c).solution)) <= 1e-9);
  }
}
