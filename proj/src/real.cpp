#include "gz/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace gz {

namespace {

thread_local BitCount tls_working_bits = kDefaultBits;

BitCount max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

WorkingPrecision::WorkingPrecision(BitCount bits) : saved_(tls_working_bits) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) throw std::invalid_argument("precision out of range");
  tls_working_bits = bits;
}

WorkingPrecision::~WorkingPrecision() { tls_working_bits = saved_; }

BitCount WorkingPrecision::current() { return tls_working_bits; }

Real make_uninit(BitCount bits) { return Real(Real::NoInit{}, bits); }

Real::Real(NoInit, BitCount bits) { mpfr_init2(value_, bits); }

Real::Real() {
  mpfr_init2(value_, tls_working_bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(double v) : Real() { mpfr_set_d(value_, v, MPFR_RNDN); }

Real::Real(const mpz_class& v, BitCount bits) : Real(NoInit{}, bits) {
  mpfr_set_z(value_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& v, BitCount bits) : Real(NoInit{}, bits) {
  mpfr_set_q(value_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) : Real(NoInit{}, other.precision()) { mpfr_set(value_, other.value_, MPFR_RNDN); }

Real::Real(Real&& other) noexcept : Real(NoInit{}, MPFR_PREC_MIN) { mpfr_swap(value_, other.value_); }

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::parse(std::string_view text, BitCount bits) {
  std::string s(text);
  Real r(NoInit{}, bits);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  return r;
}

Real Real::zero(BitCount bits) {
  Real r(NoInit{}, bits);
  mpfr_set_zero(r.value_, 1);
  return r;
}

Real Real::pi(BitCount bits) {
  Real r(NoInit{}, bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real Real::ln2(BitCount bits) {
  Real r(NoInit{}, bits);
  mpfr_const_log2(r.value_, MPFR_RNDN);
  return r;
}

Real Real::euler_gamma(BitCount bits) {
  Real r(NoInit{}, bits);
  mpfr_const_euler(r.value_, MPFR_RNDN);
  return r;
}

Real Real::pow2(long e, BitCount bits) {
  Real r(NoInit{}, bits);
  mpfr_set_ui_2exp(r.value_, 1, e, MPFR_RNDN);
  return r;
}

Real Real::rounded(BitCount bits) const {
  Real r(NoInit{}, bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  // Drop the digits covered by the default error target 2^(9 - bits).
  if (digits <= 0) digits = digits_for_bits(precision() > 20 ? precision() - 10 : precision());
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real Real::operator-() const {
  Real r(NoInit{}, precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real operator+(const Real& a, const Real& b) {
  Real r(Real::NoInit{}, max_prec(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(Real::NoInit{}, max_prec(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(Real::NoInit{}, max_prec(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(Real::NoInit{}, max_prec(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

#define GZ_UNARY(name, fn)                  \
  Real name(const Real& x) {                \
    Real r = make_uninit(x.precision());    \
    fn(r.get(), x.get(), MPFR_RNDN);        \
    return r;                               \
  }

GZ_UNARY(sqrt, mpfr_sqrt)
GZ_UNARY(exp, mpfr_exp)
GZ_UNARY(log, mpfr_log)
GZ_UNARY(log1p, mpfr_log1p)
GZ_UNARY(sin, mpfr_sin)
GZ_UNARY(cos, mpfr_cos)
GZ_UNARY(sinh, mpfr_sinh)
GZ_UNARY(cosh, mpfr_cosh)
GZ_UNARY(abs, mpfr_abs)

#undef GZ_UNARY

Real floor(const Real& x) {
  Real r = make_uninit(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

Real round(const Real& x) {
  Real r = make_uninit(x.precision());
  mpfr_round(r.get(), x.get());
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r = make_uninit(std::max(x.precision(), y.precision()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r = make_uninit(std::max(x.precision(), y.precision()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r = make_uninit(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r = make_uninit(std::max(x.precision(), y.precision()));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r = make_uninit(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

void sin_cos(const Real& x, Real& s, Real& c) {
  s = make_uninit(x.precision());
  c = make_uninit(x.precision());
  mpfr_sin_cos(s.get(), c.get(), x.get(), MPFR_RNDN);
}

BitCount bits_for_digits(int digits) {
  return static_cast<BitCount>(std::ceil(digits * 3.321928094887362)) + 1;
}

int digits_for_bits(BitCount bits) {
  return std::max(1, static_cast<int>(std::floor(static_cast<double>(bits) * 0.30102999566398120)));
}

}  // namespace gz
