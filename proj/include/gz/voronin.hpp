#pragma once

// Sampling of the curve gamma(y) = (zeta, zeta', ..., zeta^(m))(x + iy) and a
// grid-plus-refinement search for close approaches to a target vector.

#include "gz/complex.hpp"
#include "gz/specfun.hpp"

#include <utility>
#include <vector>

namespace gz {

struct CurveSample {
  double y = 0;
  std::vector<ComplexHP> values;
};

struct ApproachResult {
  double best_y = 0;
  Real distance;
  std::size_t samples_scanned = 0;
  std::pair<double, double> range;
};

inline constexpr double kDefaultCurveX = 0.75;
inline constexpr double kDefaultStep = 0.05;
inline constexpr unsigned kMaxCurveOrder = 6;

/// Throws DomainError unless 1/2 < x < 1 and m <= 6.
CurveSample gamma_curve(double y, unsigned m, double x, const PrecisionConfig& cfg);

/// Euclidean distance in C^(m+1).
Real curve_distance(const std::vector<ComplexHP>& a, const std::vector<ComplexHP>& b);

/// Grid scan y = lo + k*step over [lo, hi], then one golden-section pass on
/// the cell around the best grid point. Ties go to the smaller y.
ApproachResult nearest_approach(const std::vector<ComplexHP>& target, std::pair<double, double> y_range, double step,
                                unsigned m, double x, const PrecisionConfig& cfg);

/// nearest_approach over each range of a nested, increasing sequence. The
/// grid of an earlier range is reused, so distances never increase.
std::vector<ApproachResult> density_trend(const std::vector<ComplexHP>& target,
                                          const std::vector<std::pair<double, double>>& ranges, double step,
                                          unsigned m, double x, const PrecisionConfig& cfg);

}  // namespace gz
