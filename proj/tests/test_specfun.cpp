#include "gz/bernoulli.hpp"
#include "gz/error.hpp"
#include "gz/specfun.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace gz;
using gz::test::c;
using gz::test::distance;

namespace {

// Akiyama-Tanigawa; yields B_n with B_1 = +1/2, identical for even n.
std::vector<mpq_class> bernoulli_oracle(unsigned n_max) {
  std::vector<mpq_class> out, a(n_max + 1);
  for (unsigned m = 0; m <= n_max; ++m) {
    a[m] = mpq_class(1, m + 1);
    for (unsigned j = m; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    out.push_back(a[0]);
  }
  return out;
}

const PrecisionConfig kCfg = PrecisionConfig::for_bits(256);
constexpr double kTol = 1e-40;

}  // namespace

TEST_CASE("Bernoulli numbers match the Akiyama-Tanigawa oracle") {
  auto oracle = bernoulli_oracle(160);
  for (unsigned k = 1; k <= 80; ++k) {
    CAPTURE(k);
    CHECK(bernoulli_even(k) == oracle[2 * k]);
  }
  CHECK(bernoulli_even(3) == mpq_class(1, 42));
  CHECK(bernoulli_even(6) == mpq_class(-691, 2730));
}

TEST_CASE("Gamma at classical points") {
  WorkingPrecision wp(256);
  CHECK(distance(gamma(c("5"), kCfg), c("24")) < kTol);
  CHECK(distance(gamma(c("0.5"), kCfg), ComplexHP(sqrt(Real::pi(256)))) < kTol);
  CHECK(distance(gamma(c("0.75"), kCfg), c("1.22541670246517764512909830336289052685123925")) < kTol);
  CHECK(distance(gamma(c("0.75", "5"), kCfg), c("-0.00138950519745175867944700587568022347966255984",
                                                  "-0.000430403758037694206739029761492245679526914769")) < kTol);
}

TEST_CASE("log Gamma uses the principal branch") {
  WorkingPrecision wp(256);
  CHECK(distance(log_gamma(c("0.75", "20"), kCfg), c("-29.7480744731938780307120356382788755552284892",
                                                     "40.3078654051043485850743814863447310986583733")) < kTol);
  CHECK(distance(log_gamma(c("-3.5", "7"), kCfg), c("-18.0568643420892605983904976114826359648950285",
                                                    "-0.744927097616993639307961259913519898727221848")) < kTol);
  CHECK(distance(log_gamma(c("1"), kCfg), c("0")) < kTol);
}

TEST_CASE("Gamma recurrence and reflection at random points") {
  WorkingPrecision wp(256);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> re(-6, 6), im(-30, 30);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexHP z{Real(re(rng)).rounded(256), Real(im(rng)).rounded(256)};
    CAPTURE(to_string(z, 10));
    ComplexHP g = gamma(z, kCfg);
    ComplexHP g1 = gamma(z + ComplexHP(1), kCfg);
    CHECK(abs(g1 - z * g).to_double() <= 1e-60 * abs(g1).to_double());
    ComplexHP pi{Real::pi(256)};
    ComplexHP reflect = g * gamma(ComplexHP(1) - z, kCfg) * sin(pi * z);
    CHECK(distance(reflect, pi) < 1e-60);
  }
}

TEST_CASE("Gamma poles") {
  CHECK_THROWS_AS(gamma(c("0"), kCfg), PoleError);
  CHECK_THROWS_AS(log_gamma(c("-3"), kCfg), PoleError);
  CHECK_THROWS_AS(digamma_jet(c("-1"), 1, kCfg), PoleError);
  CHECK_NOTHROW(gamma(c("-3", "1e-20"), kCfg));
}

TEST_CASE("digamma jet") {
  WorkingPrecision wp(256);
  auto jet = digamma_jet(c("0.75", "2"), 2, kCfg);
  CHECK(distance(jet[0], c("0.69052447603124650641626607875577187931147013",
                           "1.44364352290575733344946508463249170838226327")) < kTol);
  CHECK(distance(jet[1], c("0.0659875978919237217369222187729524105679002824",
                           "-0.502595410878424951147772005497655088814640802")) < kTol);
  CHECK(distance(jet[2], c("0.25362741670994643054661736625766175779095404",
                           "0.0702143829513584958771163836949694609253216479")) < kTol);

  auto at_one = digamma_jet(c("1"), 1, kCfg);
  CHECK(distance(at_one[0], ComplexHP(-Real::euler_gamma(256))) < kTol);
  Real pi = Real::pi(256);
  CHECK(distance(at_one[1], ComplexHP(pi * pi / Real(6))) < kTol);

  // psi(z + 1) = psi(z) + 1/z
  ComplexHP z = c("-2.25", "0.5");
  CHECK(distance(digamma_jet(z + ComplexHP(1), 0, kCfg)[0], digamma_jet(z, 0, kCfg)[0] + ComplexHP(1) / z) < kTol);
}

TEST_CASE("Gamma derivatives") {
  WorkingPrecision wp(256);
  CHECK(distance(gamma_deriv(c("2.5", "1"), 3, kCfg), c("0.147933912062088066637081715312765208605685386",
                                                        "1.60209334345952174275961033259009231918859981")) < kTol);
  ComplexHP z = c("0.75", "3");
  CHECK(distance(gamma_deriv(z, 0, kCfg), gamma(z, kCfg)) < kTol);
  // Central difference of Gamma' against Gamma''.
  ComplexHP h = c("1e-20");
  ComplexHP fd = (gamma_deriv(z + h, 1, kCfg) - gamma_deriv(z - h, 1, kCfg)) / (h * ComplexHP(2));
  CHECK(distance(fd, gamma_deriv(z, 2, kCfg)) < 1e-35);
}

TEST_CASE("zeta at classical points") {
  WorkingPrecision wp(256);
  Real pi = Real::pi(256);
  CHECK(distance(zeta_jet(c("2"), 0, kCfg)[0], ComplexHP(pi * pi / Real(6))) < kTol);
  CHECK(distance(zeta_jet(c("4"), 0, kCfg)[0], ComplexHP(pow(pi, 4) / Real(90))) < kTol);
  CHECK(distance(zeta_jet(c("0"), 0, kCfg)[0], c("-0.5")) < kTol);
  CHECK(distance(zeta_jet(c("-1"), 0, kCfg)[0], ComplexHP(Real(-1) / Real(12))) < kTol);
  CHECK(distance(zeta_jet(c("-2"), 0, kCfg)[0], c("0")) < kTol);
}

TEST_CASE("zeta jets against reference values") {
  WorkingPrecision wp(256);
  auto real_jet = zeta_jet(c("0.75"), 1, kCfg);
  CHECK(distance(real_jet[0], c("-3.44128538694522289439513996070931546157638118")) < kTol);
  CHECK(distance(real_jet[1], c("-15.9248319286904863632305139377451820770296407")) < kTol);

  auto jet = zeta_jet(c("0.75", "40"), 2, kCfg);
  CHECK(distance(jet[0], c("0.827895473591270588851950595983583104937542835",
                           "-0.707048017985409885877974995706074271626511123")) < kTol);
  CHECK(distance(jet[1], c("0.108099733293152234385071064989916841573837865",
                           "1.06218639638209675910231419084695385397423705")) < kTol);
  CHECK(distance(jet[2], c("-0.201247241546739837083026644287454387176858933",
                           "-1.86841491889489213622653312407442253182683018")) < kTol);

  auto high = zeta_jet(c("0.75", "150.5"), 1, kCfg);
  CHECK(distance(high[0], c("0.332245680929960714571935335613172418688534948",
                            "0.0111992262790576317095572302712210855363537155")) < kTol);
  CHECK(distance(high[1], c("0.172285003372926281322827413063491436550905516",
                            "0.030072528900384662861569150457577221889261921")) < kTol);

  CHECK(distance(zeta_jet(c("-2.5", "3"), 0, kCfg)[0], c("0.0687636790336464816284776659999464405685582325",
                                                         "0.133980283937834426973930137429573419562127851")) < kTol);
}

TEST_CASE("zeta derivatives agree with finite differences") {
  WorkingPrecision wp(256);
  ComplexHP s = c("0.6", "17");
  ComplexHP h = c("1e-20");
  auto jet = zeta_jet(s, 3, kCfg);
  for (unsigned k = 0; k < 3; ++k) {
    auto plus = zeta_jet(s + h, k, kCfg)[k];
    auto minus = zeta_jet(s - h, k, kCfg)[k];
    CHECK(distance((plus - minus) / (h * ComplexHP(2)), jet[k + 1]) < 1e-35);
  }
}

TEST_CASE("zeta pole") {
  CHECK_THROWS_AS(zeta_jet(c("1"), 0, kCfg), PoleError);
  CHECK_NOTHROW(zeta_jet(c("1", "1e-10"), 0, kCfg));
}

TEST_CASE("doubling precision tracks a higher-precision reference") {
  ComplexHP z128 = c("0.75", "23", 128), z256 = c("0.75", "23", 256), z512 = c("0.75", "23", 512);
  auto cfg128 = PrecisionConfig::for_bits(128), cfg256 = PrecisionConfig::for_bits(256),
       cfg512 = PrecisionConfig::for_bits(512);
  ComplexHP ref = zeta_jet(z512, 0, cfg512)[0];
  Real e128 = abs(zeta_jet(z128, 0, cfg128)[0] - ref);
  Real e256 = abs(zeta_jet(z256, 0, cfg256)[0] - ref);
  CHECK(e128 < Real::pow2(-110, 64));
  CHECK(e256 < Real::pow2(-238, 64));

  ComplexHP g_ref = log_gamma(z512, cfg512);
  CHECK(abs(log_gamma(z128, cfg128) - g_ref) < Real::pow2(-110, 64));
  CHECK(abs(log_gamma(z256, cfg256) - g_ref) < Real::pow2(-238, 64));
}

TEST_CASE("results carry the requested precision") {
  auto cfg = PrecisionConfig::for_bits(160);
  CHECK(gamma(c("3", "1", 160), cfg).precision_bits() == 160);
  CHECK(zeta_jet(c("3", "1", 160), 2, cfg)[2].precision_bits() == 160);
}

TEST_CASE("configuration validation") {
  PrecisionConfig cfg = PrecisionConfig::for_bits(128);
  CHECK_NOTHROW(cfg.validate());
  cfg.target_abs_error = Real::pow2(-200, 64);
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("functional equation residual") {
  WorkingPrecision wp(256);
  for (double y : {1.0, 7.5, 40.0}) {
    CAPTURE(y);
    CHECK(functional_eq_residual(ComplexHP{Real(0.75).rounded(256), Real(y).rounded(256)}, kCfg) <
          Real::pow2(-200, 64));
  }
}

TEST_CASE("zeta derivatives agree with Cauchy-circle quadrature") {
  WorkingPrecision wp(256);
  ComplexHP s = c("0.75", "10");
  Real r = Real::parse("0.3", 256);
  const int points = 64;
  auto jet = zeta_jet(s, 3, kCfg);
  std::vector<ComplexHP> coeff(4, ComplexHP(0));
  Real two_pi = ldexp(Real::pi(256), 1);
  for (int k = 0; k < points; ++k) {
    ComplexHP w = expi(two_pi * Real(k) / Real(points));
    ComplexHP value = zeta_jet(s + w * r, 0, kCfg)[0];
    ComplexHP wk(1);
    for (int d = 0; d <= 3; ++d) {
      coeff[d] += value / wk;
      wk *= w;
    }
  }
  Real factorial(1);
  for (int d = 0; d <= 3; ++d) {
    if (d > 0) factorial *= Real(d);
    ComplexHP derivative = coeff[d] * factorial / (Real(points) * pow(r, static_cast<long>(d)));
    CAPTURE(d);
    CHECK(distance(derivative, jet[d]) < 1e-50);
  }
}
