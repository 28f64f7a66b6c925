#include "gz/asym.hpp"

#include "gz/diffpoly.hpp"
#include "gz/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace gz {

namespace {

void check_sector(const ComplexHP& z, const char* who) {
  if (abs(z) < Real(10) || abs(arg(z)) > ldexp(Real::pi(z.precision_bits()), -1))
    throw SectorError(std::string(who) + ": z outside |z| >= 10, |arg z| <= pi/2");
}

// Magnitude below which f' is treated as zero.
Real division_floor(const PrecisionConfig& cfg) { return cfg.target_abs_error * Real(1024); }

}  // namespace

ComplexHP epsilon_n(const ComplexHP& z, unsigned n, const PrecisionConfig& cfg) {
  if (n == 0) throw std::invalid_argument("epsilon_n: n must be >= 1");
  check_sector(z, "epsilon_n");
  BitCount bits = cfg.precision_bits;
  WorkingPrecision wp(bits);
  auto jet = digamma_jet(z, std::max(1U, n - 1), cfg);
  const ComplexHP& f = jet[0];
  const ComplexHP& f1 = jet[1];
  if (abs(f1) < division_floor(cfg)) throw DivisionNearZero("epsilon_n: |f'(z)| below precision floor");
  if (abs(f) < division_floor(cfg)) throw DivisionNearZero("epsilon_n: |f(z)| below precision floor");

  ComplexHP ratio = evaluate(gamma_log_ratio(n), jet) / pow(f, static_cast<long>(n));
  ComplexHP one{Real(1).rounded(bits)};
  return (ratio - one) * (f * f) / f1 - ComplexHP(Real(c_coefficient(n), bits));
}

mpq_class epsilon_leading(unsigned n) {
  if (n == 0) throw std::invalid_argument("epsilon_leading: n must be >= 1");
  mpz_class nn = n;
  mpq_class k(-(nn * (nn - 1) * (nn - 2)), 6);
  k.canonicalize();
  return k;
}

AsymptoticReport verify_epsilon(unsigned n, const std::vector<ComplexHP>& zs, const PrecisionConfig& cfg) {
  for (std::size_t i = 1; i < zs.size(); ++i)
    if (abs(zs[i]) < abs(zs[i - 1])) throw std::invalid_argument("verify_epsilon: points must be sorted by modulus");

  AsymptoticReport report;
  report.n = n;
  report.sample_points = zs;
  BitCount bits = cfg.precision_bits;
  WorkingPrecision wp(bits);
  Real k_n(epsilon_leading(n), bits);
  Real budget = ldexp(cfg.target_abs_error, 40);

  for (const auto& z : zs) {
    ComplexHP measured = epsilon_n(z, n, cfg);
    ComplexHP predicted = ComplexHP(k_n) / (z * log(z));
    ComplexHP ratio;
    if (k_n.is_zero()) {
      // Vacuous comparison: eps_n is identically zero.
      ratio = abs(measured) < budget ? ComplexHP(Real(1).rounded(bits)) : ComplexHP(Real::zero(bits));
    } else {
      ratio = measured / predicted;
    }
    report.measured.push_back(std::move(measured));
    report.predicted.push_back(std::move(predicted));
    report.ratios.push_back(std::move(ratio));
  }

  ComplexHP one{Real(1).rounded(bits)};
  bool monotone = true;
  for (std::size_t i = 1; i < report.ratios.size(); ++i)
    if (abs(report.ratios[i] - one) > abs(report.ratios[i - 1] - one)) monotone = false;
  bool final_band = report.ratios.empty() || abs(report.ratios.back() - one) < Real(0.3);
  report.converging = monotone && final_band;

  bool decreasing = true;
  for (std::size_t i = 1; i < report.measured.size(); ++i) {
    Real a = abs(report.measured[i]);
    Real b = abs(report.measured[i - 1]);
    if (!(a < b) && !(a < budget && b < budget)) decreasing = false;
  }
  report.measured_decreasing = decreasing;
  return report;
}

std::pair<ComplexHP, ComplexHP> h_limits(const ComplexHP& z, const PrecisionConfig& cfg) {
  check_sector(z, "h_limits");
  WorkingPrecision wp(cfg.precision_bits);
  auto jet = digamma_jet(z, 2, cfg);
  const ComplexHP& f = jet[0];
  const ComplexHP& f1 = jet[1];
  const ComplexHP& f2 = jet[2];
  if (abs(f1) < division_floor(cfg) || abs(f) < division_floor(cfg))
    throw DivisionNearZero("h_limits: |f| or |f'| below precision floor");
  ComplexHP log_z = log(z);
  ComplexHP h_scaled = f1 / (f * f) * z * log_z * log_z;
  ComplexHP ratio_scaled = f2 / (f * f1) * z * log_z;
  return {h_scaled, ratio_scaled};
}

Real stirling_modulus_ratio(const Real& y, const PrecisionConfig& cfg) {
  if (y < Real(1)) throw DomainError("stirling_modulus_ratio: y must be >= 1");
  BitCount bits = cfg.precision_bits;
  WorkingPrecision wp(bits);
  Real yw = y.rounded(bits);
  Real pi = Real::pi(bits);
  ComplexHP z{Real(0.75).rounded(bits), yw};
  // log |Gamma(z)| - (-pi y/2 + (1/4) log y + (1/2) log(2 pi))
  Real log_ratio = log_gamma(z, cfg).re() + ldexp(pi * yw, -1) - ldexp(log(yw), -2) - ldexp(log(ldexp(pi, 1)), -1);
  return exp(log_ratio);
}

}  // namespace gz
