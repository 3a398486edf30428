#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "tverberg/errors.hpp"
#include "tverberg/index.hpp"
#include "tverberg/oracles.hpp"

using namespace tverberg;

namespace {

BigInt power(BigInt base, int exponent) {
  BigInt out = 1;
  while (exponent-- > 0) out *= base;
  return out;
}

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

// Every labeling of n points by exponents in [0, q), in odometer order.
template <typename Visit>
void for_each_labeling(int q, int n, Visit&& visit) {
  Labeling lab{q, std::vector<int>(n, 0)};
  while (true) {
    visit(lab);
    int i = 0;
    while (i < n && ++lab.exponents[i] == q) lab.exponents[i++] = 0;
    if (i == n) return;
  }
}

}  // namespace

TEST_CASE("euler_number") {
  CHECK(euler_number(3, 2) == 8);
  CHECK(euler_number(4, 1) == 36);
  for (int d = 1; d <= 6; ++d) CHECK(euler_number(2, d) == 1);
  for (int q = 2; q <= 6; ++q)
    for (int d = 1; d <= 4; ++d) CHECK(euler_number(q, d) == power(factorial(q - 1), d + 1));
  CHECK_THROWS_AS(euler_number(1, 1), InvalidParameter);
}

TEST_CASE("vandermonde_delta") {
  const auto one = cyclo_root(3, 0);
  const auto w = cyclo_root(3, 1);
  CHECK(vandermonde_delta({one, w}) == cyclo_root(3, 2) - w);
  CHECK(vandermonde_delta({w, w}).is_zero());
  CHECK(vandermonde_delta({cyclo_root(5, 2), cyclo_root(5, 4), cyclo_root(5, 2), cyclo_root(5, 1)}).is_zero());
  CHECK_THROWS_AS(vandermonde_delta({}), InvalidParameter);
}

TEST_CASE("Vandermonde conjugation rule on random root tuples") {
  std::mt19937_64 rng(41);
  for (int q = 2; q <= 6; ++q) {
    std::uniform_int_distribution<int> pick(0, q - 1);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int> exponents(q - 1);
      for (auto& e : exponents) e = pick(rng);
      CHECK(vandermonde_conjugation_holds(q, exponents));
    }
  }
}

TEST_CASE("laplace_oracle equals det_D on every labeling") {
  for (auto [q, d] : {std::pair{3, 1}, std::pair{2, 2}}) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto config = random_config(make_params(q, d), seed);
      for_each_labeling(q, config.params.num_points(), [&](const Labeling& lab) {
        CHECK(laplace_oracle(config, lab) == det_D(config, lab));
      });
    }
  }
  CHECK_THROWS_AS(laplace_oracle(random_config(make_params(3, 4), 0), Labeling{3, std::vector<int>(11, 0)}),
                  SizeError);
}

TEST_CASE("laplace_oracle on Sierksma S0 with q=4, d=1") {
  const auto config = sierksma_config(make_params(4, 1), Rational(1, 1 << 16));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto lab = tverberg::testing::random_labeling(rng, 4, config.params.num_points());
    CHECK(laplace_oracle(config, lab) == det_D(config, lab));
  }
}

TEST_CASE("cross ratios are real") {
  const auto fixed = cross_ratio_check(Labeling{3, {0, 1, 0, 1}}, 1, 50, 1);
  CHECK(fixed.all_real);
  CHECK(fixed.checked == 50);

  const auto binary = cross_ratio_check(Labeling{2, {0, 1, 1}}, 2, 20, 2);
  CHECK(binary.all_real);

  std::mt19937_64 rng(7);
  for (int q = 3; q <= 5; ++q) {
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto lab = tverberg::testing::random_block_labeling(rng, q, 1);
      const auto result = cross_ratio_check(lab, 1, 10, static_cast<std::uint64_t>(trial));
      CHECK(result.all_real);
      checked += result.checked;
    }
    CHECK(checked == 1000);
  }

  const auto repeated = cross_ratio_check(Labeling{3, {0, 0, 1, 1}}, 1, 5, 1);
  CHECK(repeated.skipped == 5);
}
