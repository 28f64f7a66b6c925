#pragma once

#include "gz/real.hpp"

#include <string>

namespace gz {

/// Complex number over Real. Precision is the larger of the parts.
class ComplexHP {
 public:
  ComplexHP() = default;
  ComplexHP(Real re) : re_(std::move(re)), im_(Real::zero(re_.precision())) {}  // NOLINT
  ComplexHP(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  template <typename T>
    requires std::integral<T> || std::floating_point<T>
  ComplexHP(T re) : ComplexHP(Real(re)) {}  // NOLINT

  /// Parses "a", "bi", "a+bi", "a-bi" (decimal parts, optional spaces).
  static ComplexHP parse(std::string_view text, BitCount bits = WorkingPrecision::current());
  static ComplexHP i(BitCount bits = WorkingPrecision::current());

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  BitCount precision_bits() const { return std::max(re_.precision(), im_.precision()); }
  ComplexHP rounded(BitCount bits) const { return {re_.rounded(bits), im_.rounded(bits)}; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  ComplexHP operator-() const { return {-re_, -im_}; }
  ComplexHP& operator+=(const ComplexHP& rhs);
  ComplexHP& operator-=(const ComplexHP& rhs);
  ComplexHP& operator*=(const ComplexHP& rhs);
  ComplexHP& operator/=(const ComplexHP& rhs);

  friend ComplexHP operator+(const ComplexHP& a, const ComplexHP& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend ComplexHP operator-(const ComplexHP& a, const ComplexHP& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend ComplexHP operator*(const ComplexHP& a, const ComplexHP& b);
  friend ComplexHP operator/(const ComplexHP& a, const ComplexHP& b);
  friend ComplexHP operator*(const ComplexHP& a, const Real& b) { return {a.re_ * b, a.im_ * b}; }
  friend ComplexHP operator*(const Real& b, const ComplexHP& a) { return {a.re_ * b, a.im_ * b}; }
  friend ComplexHP operator/(const ComplexHP& a, const Real& b) { return {a.re_ / b, a.im_ / b}; }

  friend bool operator==(const ComplexHP& a, const ComplexHP& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  Real re_;
  Real im_;
};

ComplexHP conj(const ComplexHP& z);
/// |z|^2
Real norm(const ComplexHP& z);
Real abs(const ComplexHP& z);
/// Principal argument in (-pi, pi].
Real arg(const ComplexHP& z);
ComplexHP exp(const ComplexHP& z);
/// Principal branch.
ComplexHP log(const ComplexHP& z);
ComplexHP pow(const ComplexHP& base, const ComplexHP& exponent);
ComplexHP pow(const ComplexHP& base, long n);
ComplexHP sin(const ComplexHP& z);
ComplexHP cos(const ComplexHP& z);
ComplexHP sqrt(const ComplexHP& z);
/// e^{i*theta}
ComplexHP expi(const Real& theta);

/// "a+bi" using Real::to_string for both parts.
std::string to_string(const ComplexHP& z, int digits = 0);

}  // namespace gz
