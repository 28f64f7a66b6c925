#include "gz/error.hpp"
#include "gz/voronin.hpp"

#include <doctest.h>

using namespace gz;

namespace {
const PrecisionConfig kCfg = PrecisionConfig::for_bits(128);
}

TEST_CASE("curve samples are zeta jets") {
  WorkingPrecision wp(128);
  auto sample = gamma_curve(14.0, 2, 0.75, kCfg);
  auto jet = zeta_jet(ComplexHP{Real(0.75), Real(14)}, 2, kCfg);
  REQUIRE(sample.values.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(abs(sample.values[k] - jet[k]) < Real(1e-30));
}

TEST_CASE("curve domain") {
  CHECK_THROWS_AS(gamma_curve(1, 0, 0.5, kCfg), DomainError);
  CHECK_THROWS_AS(gamma_curve(1, 0, 1.0, kCfg), DomainError);
  CHECK_THROWS_AS(gamma_curve(1, 7, 0.75, kCfg), DomainError);
}

TEST_CASE("distance") {
  std::vector<ComplexHP> a = {ComplexHP(3), ComplexHP{Real(0), Real(4)}};
  std::vector<ComplexHP> b = {ComplexHP(0), ComplexHP(0)};
  CHECK(curve_distance(a, b).to_double() == 5.0);
  CHECK_THROWS_AS(curve_distance(a, {ComplexHP(0)}), std::invalid_argument);
}

TEST_CASE("self approach on the grid") {
  WorkingPrecision wp(128);
  auto target = gamma_curve(7.5, 1, 0.75, kCfg).values;
  auto result = nearest_approach(target, {5, 10}, 0.25, 1, 0.75, kCfg);
  CHECK(result.distance < Real(1e-6));
  CHECK(result.best_y == doctest::Approx(7.5));
  CHECK(result.samples_scanned == 21);
}

TEST_CASE("refinement never loses to the grid") {
  WorkingPrecision wp(128);
  std::vector<ComplexHP> target = {ComplexHP(1)};
  auto coarse = nearest_approach(target, {0, 30}, 0.5, 0, 0.75, kCfg);
  double best_grid = 1e300;
  for (int k = 0; k <= 60; ++k)
    best_grid = std::min(best_grid, curve_distance(gamma_curve(0.5 * k, 0, 0.75, kCfg).values, target).to_double());
  CHECK(coarse.distance.to_double() <= best_grid);
}

TEST_CASE("nested ranges give non-increasing minima") {
  WorkingPrecision wp(128);
  std::vector<ComplexHP> target = {ComplexHP{Real(0.5), Real(0.5)}};
  auto trend = density_trend(target, {{20, 25}, {15, 30}, {10, 40}}, 0.25, 0, 0.75, kCfg);
  REQUIRE(trend.size() == 3);
  CHECK(trend[1].distance <= trend[0].distance);
  CHECK(trend[2].distance <= trend[1].distance);
  CHECK_THROWS_AS(density_trend(target, {{10, 40}, {20, 25}}, 0.25, 0, 0.75, kCfg), std::invalid_argument);
}

TEST_CASE("argument checks") {
  std::vector<ComplexHP> target = {ComplexHP(1)};
  CHECK_THROWS_AS(nearest_approach(target, {0, 1}, 0, 0, 0.75, kCfg), std::invalid_argument);
  CHECK_THROWS_AS(nearest_approach(target, {2, 1}, 0.1, 0, 0.75, kCfg), std::invalid_argument);
  CHECK_THROWS_AS(nearest_approach(target, {0, 1}, 0.1, 1, 0.75, kCfg), std::invalid_argument);
}
