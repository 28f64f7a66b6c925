#pragma once

// High-precision complex Gamma, log-Gamma, polygamma jets and zeta jets.
//
// All routines work internally with a few guard bits above
// PrecisionConfig::precision_bits and round their results back to it.

#include "gz/complex.hpp"

#include <vector>

namespace gz {

struct PrecisionConfig {
  BitCount precision_bits = kDefaultBits;
  /// Absolute error target; must be >= 2^(1 - precision_bits).
  Real target_abs_error = Real::pow2(9 - static_cast<long>(kDefaultBits), 64);
  unsigned max_series_terms = 4000;
  /// Minimum |z| before an asymptotic series is used. The effective
  /// threshold also grows with precision_bits.
  double shift_threshold = 16.0;

  /// Defaults for the given precision: target 2^(9 - bits).
  static PrecisionConfig for_bits(BitCount bits);
  /// Throws std::invalid_argument if an invariant is violated.
  void validate() const;
};

/// Principal branch of log Gamma (the branch real on the positive axis).
/// Throws PoleError at non-positive integers.
ComplexHP log_gamma(const ComplexHP& z, const PrecisionConfig& cfg);

ComplexHP gamma(const ComplexHP& z, const PrecisionConfig& cfg);

/// (f(z), f'(z), ..., f^(n_max)(z)) with f = Gamma'/Gamma.
std::vector<ComplexHP> digamma_jet(const ComplexHP& z, unsigned n_max, const PrecisionConfig& cfg);

/// Gamma^(n)(z) = Gamma(z) * R_n(f, f', ..., f^(n-1)).
ComplexHP gamma_deriv(const ComplexHP& z, unsigned n, const PrecisionConfig& cfg);

/// (zeta(s), zeta'(s), ..., zeta^(m_max)(s)) by Euler-Maclaurin summation,
/// differentiated termwise. Throws PoleError at s = 1.
std::vector<ComplexHP> zeta_jet(const ComplexHP& s, unsigned m_max, const PrecisionConfig& cfg);

/// |zeta(1-z) - 2^(1-z) pi^(-z) cos(pi z/2) Gamma(z) zeta(z)|.
Real functional_eq_residual(const ComplexHP& z, const PrecisionConfig& cfg);

}  // namespace gz
