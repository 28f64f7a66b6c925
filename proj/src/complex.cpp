#include "gz/complex.hpp"

#include <cctype>
#include <stdexcept>

namespace gz {

ComplexHP ComplexHP::i(BitCount bits) { return {Real::zero(bits), Real(1).rounded(bits)}; }

ComplexHP ComplexHP::parse(std::string_view text, BitCount bits) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty complex literal");

  auto parse_imag = [&](std::string_view part) -> Real {
    // part ends in 'i'; the coefficient may be empty or a bare sign
    std::string_view coef = part.substr(0, part.size() - 1);
    if (coef.empty() || coef == "+") return Real(1).rounded(bits);
    if (coef == "-") return Real(-1).rounded(bits);
    return Real::parse(coef, bits);
  };

  if (s.back() != 'i') return {Real::parse(s, bits), Real::zero(bits)};

  // Split at the last sign that is not the leading one and not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size() - 1; k > 0; --k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {Real::zero(bits), parse_imag(s)};
  return {Real::parse(std::string_view(s).substr(0, split), bits), parse_imag(std::string_view(s).substr(split))};
}

ComplexHP& ComplexHP::operator+=(const ComplexHP& rhs) { return *this = *this + rhs; }
ComplexHP& ComplexHP::operator-=(const ComplexHP& rhs) { return *this = *this - rhs; }
ComplexHP& ComplexHP::operator*=(const ComplexHP& rhs) { return *this = *this * rhs; }
ComplexHP& ComplexHP::operator/=(const ComplexHP& rhs) { return *this = *this / rhs; }

ComplexHP operator*(const ComplexHP& a, const ComplexHP& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

ComplexHP operator/(const ComplexHP& a, const ComplexHP& b) {
  // Smith's scaling keeps intermediate magnitudes bounded.
  if (abs(b.re_) >= abs(b.im_)) {
    Real r = b.im_ / b.re_;
    Real d = b.re_ + b.im_ * r;
    return {(a.re_ + a.im_ * r) / d, (a.im_ - a.re_ * r) / d};
  }
  Real r = b.re_ / b.im_;
  Real d = b.re_ * r + b.im_;
  return {(a.re_ * r + a.im_) / d, (a.im_ * r - a.re_) / d};
}

ComplexHP conj(const ComplexHP& z) { return {z.re(), -z.im()}; }

Real norm(const ComplexHP& z) { return z.re() * z.re() + z.im() * z.im(); }

Real abs(const ComplexHP& z) { return hypot(z.re(), z.im()); }

Real arg(const ComplexHP& z) { return atan2(z.im(), z.re()); }

ComplexHP expi(const Real& theta) {
  Real s, c;
  sin_cos(theta, s, c);
  return {c, s};
}

ComplexHP exp(const ComplexHP& z) {
  Real m = exp(z.re());
  Real s, c;
  sin_cos(z.im().rounded(z.precision_bits()), s, c);
  return {m * c, m * s};
}

ComplexHP log(const ComplexHP& z) { return {log(abs(z)), arg(z)}; }

ComplexHP pow(const ComplexHP& base, const ComplexHP& exponent) {
  if (base.is_zero()) return {Real::zero(base.precision_bits()), Real::zero(base.precision_bits())};
  return exp(exponent * log(base));
}

ComplexHP pow(const ComplexHP& base, long n) {
  BitCount bits = base.precision_bits();
  ComplexHP result{Real(1).rounded(bits), Real::zero(bits)};
  ComplexHP b = n < 0 ? ComplexHP{Real(1).rounded(bits)} / base : base;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  while (e) {
    if (e & 1UL) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

ComplexHP sin(const ComplexHP& z) {
  Real s, c;
  sin_cos(z.re().rounded(z.precision_bits()), s, c);
  return {s * cosh(z.im()), c * sinh(z.im())};
}

ComplexHP cos(const ComplexHP& z) {
  Real s, c;
  sin_cos(z.re().rounded(z.precision_bits()), s, c);
  return {c * cosh(z.im()), -(s * sinh(z.im()))};
}

ComplexHP sqrt(const ComplexHP& z) {
  if (z.is_zero()) return z;
  Real r = abs(z);
  Real a = sqrt(ldexp(r + abs(z.re()), -1));
  if (z.re().sign() >= 0) return {a, z.im() / ldexp(a, 1)};
  Real b = z.im().sign() < 0 ? -a : a;
  return {abs(z.im()) / ldexp(a, 1), b};
}

std::string to_string(const ComplexHP& z, int digits) {
  std::string im = z.im().to_string(digits);
  if (im.front() != '-') im.insert(im.begin(), '+');
  return z.re().to_string(digits) + im + "i";
}

}  // namespace gz
