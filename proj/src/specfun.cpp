#include "gz/specfun.hpp"

#include "gz/bernoulli.hpp"
#include "gz/diffpoly.hpp"
#include "gz/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gz {

namespace {

constexpr BitCount kGuardBits = 32;
constexpr int kShiftRetries = 4;

// Internal signal that an asymptotic series started diverging before it
// reached the tolerance; callers retry with a larger shift.
struct SeriesDiverged {};

BitCount working_bits(const PrecisionConfig& cfg) { return cfg.precision_bits + kGuardBits; }

// Series tolerance in the working precision.
Real series_tolerance(const PrecisionConfig& cfg) { return ldexp(cfg.target_abs_error.rounded(working_bits(cfg)), -4); }

// |z| at which the optimally truncated asymptotic series for log Gamma and
// its derivatives reaches 2^-bits, plus a margin for derivative order.
double asymptotic_radius(const PrecisionConfig& cfg, unsigned order) {
  double bits = static_cast<double>(working_bits(cfg));
  return std::max(cfg.shift_threshold, bits * std::numbers::ln2 / (2 * std::numbers::pi) + order + 2.0);
}

void check_gamma_pole(const ComplexHP& z, const PrecisionConfig& cfg, const char* who) {
  if (abs(z.im()) >= cfg.target_abs_error) return;
  if (z.re() > Real(0.5)) return;
  Real nearest = round(z.re());
  if (abs(z.re() - nearest) < cfg.target_abs_error)
    throw PoleError(std::string(who) + ": pole of Gamma at z = " + nearest.to_string(6));
}

// Number of unit shifts so that |z + N| >= radius.
unsigned shift_count(const ComplexHP& z, double radius) {
  double x = z.re().to_double();
  double y = z.im().to_double();
  if (std::hypot(x, y) >= radius) return 0;
  double need = std::sqrt(std::max(0.0, radius * radius - y * y)) - x;
  return need <= 0 ? 0 : static_cast<unsigned>(std::ceil(need));
}

// Stirling series for log Gamma at w (|w| large), working precision.
ComplexHP stirling_log_gamma(const ComplexHP& w, const Real& tol, const PrecisionConfig& cfg) {
  BitCount bits = w.precision_bits();
  Real half = Real(0.5).rounded(bits);
  ComplexHP result = (w - half) * log(w) - w + ldexp(log(ldexp(Real::pi(bits), 1)), -1);

  ComplexHP inv = ComplexHP{Real(1).rounded(bits)} / w;
  ComplexHP inv2 = inv * inv;
  ComplexHP power = inv;  // w^(1-2j)
  Real previous;
  for (unsigned j = 1;; ++j) {
    if (j > cfg.max_series_terms) throw PrecisionUnreachable("log_gamma: series term budget exhausted");
    Real coef(bernoulli_even(j), bits);
    coef /= Real(static_cast<long>(2 * j) * static_cast<long>(2 * j - 1));
    ComplexHP term = power * coef;
    Real mag = abs(term);
    if (mag < tol) break;
    if (j > 2 && mag > previous) throw SeriesDiverged{};
    result += term;
    previous = mag;
    power *= inv2;
  }
  return result;
}

// log Gamma in the working precision; caller sets WorkingPrecision.
ComplexHP log_gamma_working(const ComplexHP& z, const PrecisionConfig& cfg) {
  check_gamma_pole(z, cfg, "log_gamma");
  BitCount bits = working_bits(cfg);
  ComplexHP zw = z.rounded(bits);
  Real tol = series_tolerance(cfg);
  double radius = asymptotic_radius(cfg, 0);

  for (int attempt = 0; attempt < kShiftRetries; ++attempt, radius *= 1.5) {
    unsigned shift = shift_count(zw, radius);
    try {
      ComplexHP w = zw + ComplexHP(Real(static_cast<long>(shift)).rounded(bits));
      ComplexHP result = stirling_log_gamma(w, tol, cfg);
      if (shift == 0) return result;

      // log Gamma(z) = log Gamma(z + N) - sum log(z + k). The sum is taken as
      // one log of the product, with the 2*pi*i branch fixed from a
      // double-precision sum of arguments.
      ComplexHP product{Real(1).rounded(bits)};
      double arg_sum = 0;
      for (unsigned k = 0; k < shift; ++k) {
        ComplexHP factor = zw + ComplexHP(Real(static_cast<long>(k)).rounded(bits));
        product *= factor;
        arg_sum += std::atan2(factor.im().to_double(), factor.re().to_double());
      }
      ComplexHP log_product = log(product);
      double turns = std::round((arg_sum - log_product.im().to_double()) / (2 * std::numbers::pi));
      Real correction = ldexp(Real::pi(bits), 1) * Real(turns);
      log_product = ComplexHP{log_product.re(), log_product.im() + correction};
      return result - log_product;
    } catch (const SeriesDiverged&) {
    }
  }
  throw PrecisionUnreachable("log_gamma: asymptotic series cannot reach the error target");
}

// Asymptotic polygamma values psi^(k)(w), k = 0..n_max, at large |w|.
std::vector<ComplexHP> asymptotic_polygamma(const ComplexHP& w, unsigned n_max, const Real& tol,
                                            const PrecisionConfig& cfg) {
  BitCount bits = w.precision_bits();
  ComplexHP one{Real(1).rounded(bits)};
  ComplexHP inv = one / w;
  ComplexHP inv2 = inv * inv;

  std::vector<ComplexHP> out;
  out.reserve(n_max + 1);
  // inv_k = w^(-k)
  ComplexHP inv_k = one;
  mpz_class factorial_km1 = 1;  // (k-1)!
  for (unsigned k = 0; k <= n_max; ++k) {
    ComplexHP value;
    ComplexHP power;  // w^(-2j-k), starting at j = 1
    if (k == 0) {
      value = log(w) - ldexp(Real(1).rounded(bits), -1) * inv;
      power = inv2;
    } else {
      factorial_km1 *= (k == 1 ? 1 : k - 1);
      mpz_class factorial_k = factorial_km1 * k;
      value = inv_k * Real(factorial_km1, bits) + inv_k * inv * ldexp(Real(factorial_k, bits), -1);
      power = inv_k * inv2;
    }

    Real previous;
    for (unsigned j = 1;; ++j) {
      if (j > cfg.max_series_terms) throw PrecisionUnreachable("digamma_jet: series term budget exhausted");
      mpq_class coef = bernoulli_even(j);
      if (k == 0) {
        coef /= 2 * j;
      } else {
        // (2j + k - 1)! / (2j)!
        mpz_class rising = 1;
        for (unsigned i = 2 * j + 1; i <= 2 * j + k - 1; ++i) rising *= i;
        coef *= rising;
      }
      ComplexHP term = power * Real(coef, bits);
      Real mag = abs(term);
      if (mag < tol) break;
      if (j > 2 && mag > previous) throw SeriesDiverged{};
      value = k == 0 ? value - term : value + term;
      previous = mag;
      power *= inv2;
    }
    // (-1)^(k+1) for k >= 1
    if (k > 0 && k % 2 == 0) value = -value;
    out.push_back(std::move(value));
    inv_k *= inv;
  }
  return out;
}

std::vector<ComplexHP> digamma_jet_working(const ComplexHP& z, unsigned n_max, const PrecisionConfig& cfg) {
  check_gamma_pole(z, cfg, "digamma_jet");
  BitCount bits = working_bits(cfg);
  ComplexHP zw = z.rounded(bits);
  Real tol = series_tolerance(cfg);
  double radius = asymptotic_radius(cfg, n_max);

  for (int attempt = 0; attempt < kShiftRetries; ++attempt, radius *= 1.5) {
    unsigned shift = shift_count(zw, radius);
    try {
      ComplexHP w = zw + ComplexHP(Real(static_cast<long>(shift)).rounded(bits));
      std::vector<ComplexHP> jet = asymptotic_polygamma(w, n_max, tol, cfg);
      // psi^(k)(z) = psi^(k)(z + N) - sum_j (-1)^k k! / (z + j)^(k+1)
      ComplexHP one{Real(1).rounded(bits)};
      for (unsigned j = 0; j < shift; ++j) {
        ComplexHP inv = one / (zw + ComplexHP(Real(static_cast<long>(j)).rounded(bits)));
        ComplexHP power = inv;  // (z+j)^-(k+1)
        mpz_class factorial = 1;
        for (unsigned k = 0; k <= n_max; ++k) {
          if (k > 0) factorial *= k;
          ComplexHP term = power * Real(factorial, bits);
          if (k % 2 == 0)
            jet[k] -= term;
          else
            jet[k] += term;
          power *= inv;
        }
      }
      return jet;
    } catch (const SeriesDiverged&) {
    }
  }
  throw PrecisionUnreachable("digamma_jet: asymptotic series cannot reach the error target");
}

ComplexHP gamma_working(const ComplexHP& z, const PrecisionConfig& cfg) {
  ComplexHP value = exp(log_gamma_working(z, cfg));
  if (!value.is_finite()) throw OverflowError("gamma: result outside the exponent range");
  return value;
}

// Truncated power series in a small increment eps, coefficients c_0..c_{L-1}.
class TaylorSeries {
 public:
  TaylorSeries(std::size_t length, BitCount bits) : coef_(length, ComplexHP{Real::zero(bits), Real::zero(bits)}) {}

  std::size_t size() const { return coef_.size(); }
  ComplexHP& operator[](std::size_t r) { return coef_[r]; }
  const ComplexHP& operator[](std::size_t r) const { return coef_[r]; }

  /// Multiply in place by (a + eps).
  void mul_linear(const ComplexHP& a) {
    for (std::size_t r = coef_.size(); r-- > 0;) {
      ComplexHP v = coef_[r] * a;
      if (r > 0) v += coef_[r - 1];
      coef_[r] = std::move(v);
    }
  }

  TaylorSeries operator*(const TaylorSeries& rhs) const {
    TaylorSeries out(coef_.size(), coef_.front().precision_bits());
    for (std::size_t i = 0; i < coef_.size(); ++i)
      for (std::size_t j = 0; i + j < coef_.size(); ++j) out[i + j] += coef_[i] * rhs[j];
    return out;
  }

 private:
  std::vector<ComplexHP> coef_;
};

// Coefficients of exp(eps * a) up to length.
TaylorSeries exp_series(const Real& a, std::size_t length, BitCount bits) {
  TaylorSeries out(length, bits);
  ComplexHP term{Real(1).rounded(bits)};
  for (std::size_t r = 0; r < length; ++r) {
    out[r] = term;
    term = term * a / Real(static_cast<long>(r + 1));
  }
  return out;
}

std::vector<ComplexHP> zeta_jet_working(const ComplexHP& s, unsigned m_max, const PrecisionConfig& cfg) {
  ComplexHP one_minus = s - ComplexHP(1);
  if (abs(one_minus) < cfg.target_abs_error) throw PoleError("zeta_jet: pole of zeta at s = 1");

  BitCount bits = working_bits(cfg);
  ComplexHP sw = s.rounded(bits);
  std::size_t length = m_max + 1;
  Real tol = series_tolerance(cfg);
  ComplexHP one{Real(1).rounded(bits)};

  double abs_s = abs(sw).to_double();
  double cutoff = std::max({20.0, std::ceil(abs_s / 2), std::ceil(static_cast<double>(bits) / 4)});

  std::vector<double> factorial(length, 1.0);
  for (std::size_t k = 1; k < length; ++k) factorial[k] = factorial[k - 1] * static_cast<double>(k);

  for (int attempt = 0; attempt < kShiftRetries; ++attempt, cutoff *= 2) {
    auto terms = static_cast<long>(cutoff);
    Real log_cutoff = log(Real(terms).rounded(bits));
    // N^{-s}
    ComplexHP base = exp(-(sw * log_cutoff));
    double base_mag = abs(base).to_double();
    double log_n = log_cutoff.to_double();

    // Bracket B(eps) = N/(s-1+eps) + 1/2 + sum_j B_2j/(2j)! (s+eps)_{2j-1} N^{1-2j}
    TaylorSeries bracket(length, bits);
    {
      ComplexHP inv = one / (sw - one);
      ComplexHP power = inv * Real(terms);
      for (std::size_t r = 0; r < length; ++r) {
        bracket[r] = (r % 2 == 0) ? power : -power;
        power *= inv;
      }
      bracket[0] += ComplexHP(Real(0.5).rounded(bits));
    }

    bool converged = false;
    bool diverged = false;
    TaylorSeries rising(length, bits);  // (s+eps)_{2j-1}
    rising[0] = sw;
    if (length > 1) rising[1] = one;
    Real n_inv2 = one.re() / (Real(terms) * Real(terms));
    Real n_power = one.re() / Real(terms);  // N^{1-2j}
    mpz_class factorial_2j = 2;             // (2j)!
    double previous = 0;
    for (unsigned j = 1; j <= cfg.max_series_terms; ++j) {
      Real scale = Real(bernoulli_even(j), bits) / Real(factorial_2j, bits) * n_power;
      // Error bound of this correction after multiplying by N^{-s} e^{-eps log N}.
      double bound = 0;
      std::vector<double> mags(length);
      for (std::size_t r = 0; r < length; ++r) mags[r] = (abs(rising[r]) * abs(scale)).to_double();
      for (std::size_t k = 0; k < length; ++k) {
        double acc = 0;
        for (std::size_t r = 0; r <= k; ++r) acc += mags[r] * std::pow(log_n, double(k - r)) / factorial[k - r];
        bound = std::max(bound, acc * factorial[k] * base_mag);
      }
      if (bound < tol.to_double() || bound == 0) {
        converged = true;
        break;
      }
      if (j > 2 && bound > previous) {
        diverged = true;
        break;
      }
      previous = bound;
      for (std::size_t r = 0; r < length; ++r) bracket[r] += rising[r] * scale;

      rising.mul_linear(sw + ComplexHP(Real(static_cast<long>(2 * j - 1))));
      rising.mul_linear(sw + ComplexHP(Real(static_cast<long>(2 * j))));
      n_power *= n_inv2;
      factorial_2j *= (2 * j + 1) * (2 * j + 2);
    }
    if (diverged) continue;
    if (!converged) throw PrecisionUnreachable("zeta_jet: series term budget exhausted");

    TaylorSeries tail = exp_series(-log_cutoff, length, bits) * bracket;
    TaylorSeries sum(length, bits);
    for (std::size_t r = 0; r < length; ++r) sum[r] = tail[r] * base;

    // n^{-s} is multiplicative, so only prime powers need an exponential.
    std::vector<long> smallest_factor(static_cast<std::size_t>(terms), 0);
    std::vector<ComplexHP> powers(static_cast<std::size_t>(terms));
    std::vector<Real> logs(static_cast<std::size_t>(terms));
    for (long n = 1; n < terms; ++n) {
      auto idx = static_cast<std::size_t>(n);
      if (n == 1) {
        powers[idx] = one;
        logs[idx] = Real::zero(bits);
      } else if (smallest_factor[idx] == 0) {
        for (long k = n; k < terms; k += n)
          if (smallest_factor[static_cast<std::size_t>(k)] == 0) smallest_factor[static_cast<std::size_t>(k)] = n;
        logs[idx] = log(Real(n).rounded(bits));
        powers[idx] = exp(-(sw * logs[idx]));
      }
      if (n > 1 && smallest_factor[idx] != n) {
        auto p = static_cast<std::size_t>(smallest_factor[idx]);
        auto q = idx / p;
        powers[idx] = powers[p] * powers[q];
        logs[idx] = logs[p] + logs[q];
      }
      ComplexHP a = powers[idx];
      Real neg_log = -logs[idx];
      for (std::size_t r = 0; r < length; ++r) {
        sum[r] += a;
        if (r + 1 < length) a = a * neg_log / Real(static_cast<long>(r + 1));
      }
    }

    std::vector<ComplexHP> out;
    out.reserve(length);
    mpz_class fact = 1;
    for (std::size_t k = 0; k < length; ++k) {
      if (k > 0) fact *= static_cast<unsigned long>(k);
      out.push_back(sum[k] * Real(fact, bits));
    }
    return out;
  }
  throw PrecisionUnreachable("zeta_jet: Euler-Maclaurin tail cannot reach the error target");
}

std::vector<ComplexHP> rounded_all(std::vector<ComplexHP> values, BitCount bits) {
  for (auto& v : values) v = v.rounded(bits);
  return values;
}

}  // namespace

PrecisionConfig PrecisionConfig::for_bits(BitCount bits) {
  PrecisionConfig cfg;
  cfg.precision_bits = bits;
  cfg.target_abs_error = Real::pow2(9 - static_cast<long>(bits), 64);
  return cfg;
}

void PrecisionConfig::validate() const {
  if (precision_bits < 16) throw std::invalid_argument("precision_bits must be at least 16");
  if (target_abs_error.sign() <= 0) throw std::invalid_argument("target_abs_error must be positive");
  if (target_abs_error < Real::pow2(1 - static_cast<long>(precision_bits), 64))
    throw std::invalid_argument("target_abs_error below 2^(1 - precision_bits)");
  if (max_series_terms == 0) throw std::invalid_argument("max_series_terms must be positive");
  if (shift_threshold < 8.0) throw std::invalid_argument("shift_threshold must be at least 8");
}

ComplexHP log_gamma(const ComplexHP& z, const PrecisionConfig& cfg) {
  cfg.validate();
  WorkingPrecision wp(working_bits(cfg));
  return log_gamma_working(z, cfg).rounded(cfg.precision_bits);
}

ComplexHP gamma(const ComplexHP& z, const PrecisionConfig& cfg) {
  cfg.validate();
  WorkingPrecision wp(working_bits(cfg));
  return gamma_working(z, cfg).rounded(cfg.precision_bits);
}

std::vector<ComplexHP> digamma_jet(const ComplexHP& z, unsigned n_max, const PrecisionConfig& cfg) {
  cfg.validate();
  WorkingPrecision wp(working_bits(cfg));
  return rounded_all(digamma_jet_working(z, n_max, cfg), cfg.precision_bits);
}

ComplexHP gamma_deriv(const ComplexHP& z, unsigned n, const PrecisionConfig& cfg) {
  cfg.validate();
  const DiffPoly& ratio = gamma_log_ratio(n);
  WorkingPrecision wp(working_bits(cfg));
  ComplexHP g = gamma_working(z, cfg);
  if (n == 0) return g.rounded(cfg.precision_bits);
  auto jet = digamma_jet_working(z, n - 1, cfg);
  return (g * evaluate(ratio, jet)).rounded(cfg.precision_bits);
}

std::vector<ComplexHP> zeta_jet(const ComplexHP& s, unsigned m_max, const PrecisionConfig& cfg) {
  cfg.validate();
  WorkingPrecision wp(working_bits(cfg));
  return rounded_all(zeta_jet_working(s, m_max, cfg), cfg.precision_bits);
}

Real functional_eq_residual(const ComplexHP& z, const PrecisionConfig& cfg) {
  cfg.validate();
  BitCount bits = working_bits(cfg);
  WorkingPrecision wp(bits);
  ComplexHP zw = z.rounded(bits);
  ComplexHP one{Real(1).rounded(bits)};

  ComplexHP lhs = zeta_jet_working(one - zw, 0, cfg).front();
  ComplexHP zeta_z = zeta_jet_working(zw, 0, cfg).front();
  ComplexHP gamma_z = gamma_working(zw, cfg);

  Real pi = Real::pi(bits);
  ComplexHP two_pow = exp((one - zw) * Real::ln2(bits));
  ComplexHP pi_pow = exp(-(zw * log(pi)));
  ComplexHP cosine = cos(zw * ldexp(pi, -1));
  ComplexHP rhs = two_pow * pi_pow * cosine * gamma_z * zeta_z;
  return abs(lhs - rhs).rounded(cfg.precision_bits);
}

}  // namespace gz
