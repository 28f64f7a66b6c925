#include "gz/voronin.hpp"

#include "gz/error.hpp"

#include <cmath>
#include <stdexcept>

namespace gz {

CurveSample gamma_curve(double y, unsigned m, double x, const PrecisionConfig& cfg) {
  if (!(x > 0.5 && x < 1.0)) throw DomainError("gamma_curve: x must lie in (1/2, 1)");
  if (m > kMaxCurveOrder) throw DomainError("gamma_curve: m must be <= 6");
  WorkingPrecision wp(cfg.precision_bits);
  ComplexHP s{Real(x).rounded(cfg.precision_bits), Real(y).rounded(cfg.precision_bits)};
  return {y, zeta_jet(s, m, cfg)};
}

Real curve_distance(const std::vector<ComplexHP>& a, const std::vector<ComplexHP>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("curve_distance: dimension mismatch");
  Real sum;
  for (std::size_t i = 0; i < a.size(); ++i) sum += norm(a[i] - b[i]);
  return sqrt(sum);
}

namespace {

constexpr double kGoldenRatio = 0.6180339887498949;
constexpr int kGoldenIterations = 60;

std::size_t grid_size(std::pair<double, double> range, double step) {
  double span = range.second - range.first;
  return static_cast<std::size_t>(std::floor(span / step + 1e-9)) + 1;
}

}  // namespace

ApproachResult nearest_approach(const std::vector<ComplexHP>& target, std::pair<double, double> y_range, double step,
                                unsigned m, double x, const PrecisionConfig& cfg) {
  if (!(step > 0)) throw std::invalid_argument("nearest_approach: step must be positive");
  if (y_range.second < y_range.first) throw std::invalid_argument("nearest_approach: empty range");
  if (target.size() != m + 1) throw std::invalid_argument("nearest_approach: target must have m + 1 entries");

  auto distance_at = [&](double y) { return curve_distance(gamma_curve(y, m, x, cfg).values, target); };

  ApproachResult result;
  result.range = y_range;
  std::size_t count = grid_size(y_range, step);
  for (std::size_t k = 0; k < count; ++k) {
    double y = y_range.first + static_cast<double>(k) * step;
    Real d = distance_at(y);
    if (k == 0 || d < result.distance) {
      result.distance = d;
      result.best_y = y;
    }
  }
  result.samples_scanned = count;

  // Golden-section pass on the cell around the grid minimum.
  double a = std::max(y_range.first, result.best_y - step);
  double b = std::min(y_range.second, result.best_y + step);
  if (b - a <= 0) return result;
  double c = b - kGoldenRatio * (b - a);
  double d = a + kGoldenRatio * (b - a);
  Real fc = distance_at(c);
  Real fd = distance_at(d);
  auto consider = [&](double y, const Real& dist) {
    if (dist < result.distance) {
      result.distance = dist;
      result.best_y = y;
    }
  };
  consider(c, fc);
  consider(d, fd);
  for (int it = 0; it < kGoldenIterations && (b - a) > 1e-12 * std::max(1.0, std::abs(result.best_y)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGoldenRatio * (b - a);
      fc = distance_at(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGoldenRatio * (b - a);
      fd = distance_at(d);
    }
    consider(c, fc);
    consider(d, fd);
  }
  return result;
}

std::vector<ApproachResult> density_trend(const std::vector<ComplexHP>& target,
                                          const std::vector<std::pair<double, double>>& ranges, double step,
                                          unsigned m, double x, const PrecisionConfig& cfg) {
  for (std::size_t i = 1; i < ranges.size(); ++i)
    if (ranges[i].first > ranges[i - 1].first || ranges[i].second < ranges[i - 1].second)
      throw std::invalid_argument("density_trend: ranges must be nested and increasing");

  std::vector<ApproachResult> out;
  for (const auto& range : ranges) {
    ApproachResult r = nearest_approach(target, range, step, m, x, cfg);
    // The earlier optimum lies inside this range, so it stays admissible.
    if (!out.empty() && out.back().distance < r.distance) {
      r.distance = out.back().distance;
      r.best_y = out.back().best_y;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace gz
