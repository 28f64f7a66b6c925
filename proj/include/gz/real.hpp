#pragma once

// Arbitrary-precision real numbers backed by MPFR.
//
// Every value carries its own precision in bits. Binary operations produce a
// result at the larger of the two operand precisions. Values built from
// plain C++ numbers take the thread's working precision, which is scoped by
// WorkingPrecision.

#include <mpfr.h>
#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace gz {

using BitCount = mpfr_prec_t;

inline constexpr BitCount kDefaultBits = 256;

/// Thread-local working precision used by constructors that take no
/// explicit precision. Restores the previous value on destruction.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(BitCount bits);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

  static BitCount current();

 private:
  BitCount saved_;
};

class Real {
 public:
  Real();
  Real(double v);  // NOLINT(google-explicit-constructor)
  template <std::signed_integral T>
  Real(T v) : Real() {  // NOLINT(google-explicit-constructor)
    mpfr_set_si(value_, static_cast<long>(v), MPFR_RNDN);
  }
  template <std::unsigned_integral T>
  Real(T v) : Real() {  // NOLINT(google-explicit-constructor)
    mpfr_set_ui(value_, static_cast<unsigned long>(v), MPFR_RNDN);
  }
  explicit Real(const mpz_class& v, BitCount bits = WorkingPrecision::current());
  explicit Real(const mpq_class& v, BitCount bits = WorkingPrecision::current());

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  /// Parses a decimal (or scientific) literal. Throws std::invalid_argument.
  static Real parse(std::string_view text, BitCount bits = WorkingPrecision::current());
  static Real zero(BitCount bits);
  static Real pi(BitCount bits = WorkingPrecision::current());
  static Real ln2(BitCount bits = WorkingPrecision::current());
  static Real euler_gamma(BitCount bits = WorkingPrecision::current());
  /// 2^e at the given precision.
  static Real pow2(long e, BitCount bits = WorkingPrecision::current());

  BitCount precision() const { return mpfr_get_prec(value_); }
  /// Copy rounded to `bits`.
  Real rounded(BitCount bits) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(value_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits; 0 means "enough
  /// for the precision".
  std::string to_string(int digits = 0) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_nan() const { return mpfr_nan_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  /// Binary exponent e with 0.5 <= |x|/2^e < 1; meaningless for zero.
  long exponent() const { return mpfr_get_exp(value_); }

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.value_, b.value_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.value_, b.value_) != 0; }

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  struct NoInit {};
  Real(NoInit, BitCount bits);

  friend Real make_uninit(BitCount bits);

  mpfr_t value_;
};

Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real abs(const Real& x);
Real hypot(const Real& x, const Real& y);
Real floor(const Real& x);
Real round(const Real& x);
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

/// Joint sine/cosine.
void sin_cos(const Real& x, Real& s, Real& c);

/// Smallest precision able to represent `digits` significant decimals.
BitCount bits_for_digits(int digits);
/// Number of decimal digits printed for a value of the given precision.
int digits_for_bits(BitCount bits);

}  // namespace gz
