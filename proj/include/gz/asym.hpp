#pragma once

// Numeric checks of the large-|z| behaviour of Gamma^(n)/Gamma:
//   Gamma^(n)/Gamma = f^n [1 + H (c_n + eps_n)],  H = f'/f^2,
// with eps_n(z) ~ K_n / (z log z) and K_n = -n(n-1)(n-2)/6.

#include "gz/complex.hpp"
#include "gz/specfun.hpp"

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace gz {

struct AsymptoticReport {
  unsigned n = 0;
  std::vector<ComplexHP> sample_points;
  std::vector<ComplexHP> measured;
  std::vector<ComplexHP> predicted;
  std::vector<ComplexHP> ratios;
  /// |ratio - 1| non-increasing along the samples and final |ratio - 1| < 0.3.
  bool converging = false;
  /// |measured| strictly decreasing along the samples.
  bool measured_decreasing = false;
};

/// eps_n(z) = ((R_n / f^n) - 1) * f^2 / f' - c_n.
/// Throws SectorError unless |z| >= 10 and |arg z| <= pi/2, and
/// DivisionNearZero when |f'(z)| is below the precision floor.
ComplexHP epsilon_n(const ComplexHP& z, unsigned n, const PrecisionConfig& cfg);

/// K_n = -n(n-1)(n-2)/6.
mpq_class epsilon_leading(unsigned n);

/// Samples eps_n along `zs` (sorted by increasing modulus) and compares with
/// K_n / (z log z). For K_n = 0 the ratio is reported as 1 when the measured
/// value is within the error budget.
AsymptoticReport verify_epsilon(unsigned n, const std::vector<ComplexHP>& zs, const PrecisionConfig& cfg);

/// (H(z) z (log z)^2, f''(z)/(f(z) f'(z)) z log z), both tending to (1, -1).
std::pair<ComplexHP, ComplexHP> h_limits(const ComplexHP& z, const PrecisionConfig& cfg);

/// |Gamma(3/4 + iy)| / (e^{-pi y/2} y^{1/4} sqrt(2 pi)), computed in the log
/// domain. Requires y >= 1.
Real stirling_modulus_ratio(const Real& y, const PrecisionConfig& cfg);

}  // namespace gz
