#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cgd/mathutil.hpp"
#include "cgd/rng.hpp"

#include "helpers.hpp"

using namespace cgd;

TEST_CASE("compensated accumulator survives cancellation") {
  Accumulator acc;
  acc.add(1.0);
  for (int i = 0; i < 10; ++i) acc.add(1e16);
  for (int i = 0; i < 10; ++i) acc.add(-1e16);
  CHECK(acc.value() == doctest::Approx(1.0).epsilon(1e-15));

  Accumulator small;
  for (int i = 0; i < 1000000; ++i) small.add(0.1);
  CHECK(small.value() == doctest::Approx(100000.0).epsilon(1e-12));
}

TEST_CASE("pairwise sum matches compensated reference") {
  RngStream rng(12, 1);
  std::vector<double> xs(100001);
  Accumulator acc;
  for (double& x : xs) {
    x = rng.uniform01() * 2.0 - 1.0;
    acc.add(x);
  }
  CHECK(pairwise_sum(xs) == doctest::Approx(acc.value()).epsilon(1e-12));
  CHECK(pairwise_sum({}) == 0.0);
  CHECK(pairwise_sum({3.5}) == 3.5);
}

TEST_CASE("normal cdf reference values") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(normal_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-12));
  CHECK(normal_cdf(-1.0) + normal_cdf(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(normal_cdf(6.0) == doctest::Approx(1.0 - 9.865876450377018e-10).epsilon(1e-6));
  CHECK(normal_pdf(0.0) == doctest::Approx(1.0 / std::sqrt(8.0 * std::atan(1.0))));
}

TEST_CASE("normal quantile hits 1e-9 accuracy against bisection") {
  CHECK(normal_quantile(0.975) == doctest::Approx(1.9599640).epsilon(1e-6));
  CHECK(normal_quantile(0.5) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  const double ps[] = {1e-12, 1e-6, 0.001, 0.01,  0.025, 0.1, 0.3, 0.5,
                       0.7,   0.9,  0.975, 0.999, 0.9999, 1 - 1e-9};
  for (double p : ps) {
    const double q = normal_quantile(p);
    CHECK(std::fabs(q - cgdtest::quantile_bisect(p)) < 1e-9);
    CHECK(normal_cdf(q) == doctest::Approx(p).epsilon(1e-9));
  }
  CHECK(normal_quantile(0.25) == doctest::Approx(-normal_quantile(0.75)).epsilon(1e-12));
  CHECK_THROWS_AS(normal_quantile(0.0), std::invalid_argument);
  CHECK_THROWS_AS(normal_quantile(1.0), std::invalid_argument);
  CHECK_THROWS_AS(normal_quantile(-0.3), std::invalid_argument);
}

TEST_CASE("mix64 and hash_combine separate nearby inputs") {
  CHECK(mix64(1) != mix64(2));
  CHECK(mix64(0) != 0);
  CHECK(mix64(7) == mix64(7));
  CHECK(hash_combine(1, 2) != hash_combine(2, 1));
  CHECK(hash_combine(0, 1) != hash_combine(1, 0));
  CHECK(hash_combine(5, 9) == hash_combine(5, 9));
}
