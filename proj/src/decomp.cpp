#include "gz/decomp.hpp"

#include "gz/diffpoly.hpp"
#include "gz/error.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>

namespace gz {

void VarSpec::validate() const {
  if (n < 1 || n >= l) throw std::invalid_argument("VarSpec requires 1 <= n < l");
}

Gradings gradings(const LambdaTriple& lambda, const VarSpec& spec) {
  return {lambda.l0 + lambda.ln + lambda.ll, spec.n * lambda.ln + spec.l * lambda.ll, lambda.ln + lambda.ll};
}

std::optional<LambdaTriple> lambda_from_pqj(unsigned p, unsigned q, unsigned j, const VarSpec& spec) {
  spec.validate();
  // det B = n - l; solving the last two rows gives ll = (q - n j) / (l - n).
  long numerator = static_cast<long>(q) - static_cast<long>(spec.n) * static_cast<long>(j);
  long denominator = static_cast<long>(spec.l) - static_cast<long>(spec.n);
  if (numerator < 0 || numerator % denominator != 0) return std::nullopt;
  long ll = numerator / denominator;
  long ln = static_cast<long>(j) - ll;
  long l0 = static_cast<long>(p) - static_cast<long>(j);
  if (ln < 0 || l0 < 0) return std::nullopt;
  return LambdaTriple{static_cast<unsigned>(l0), static_cast<unsigned>(ln), static_cast<unsigned>(ll)};
}

std::array<std::array<long, 3>, 3> grading_matrix(const VarSpec& spec) {
  return {{{1, 1, 1}, {0, static_cast<long>(spec.n), static_cast<long>(spec.l)}, {0, 1, 1}}};
}

long determinant(const std::array<std::array<long, 3>, 3>& b) {
  return b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
         b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
}

PolySpec PolySpec::constant(const VarSpec& spec, const ComplexHP& c) {
  PolySpec p(spec);
  p.add_term({std::vector<unsigned>(spec.m + 1, 0), {}}, c);
  return p;
}

PolySpec PolySpec::u_variable(const VarSpec& spec, unsigned index) {
  if (index > spec.m) throw std::invalid_argument("u index above m");
  PolySpec p(spec);
  PolyKey key{std::vector<unsigned>(spec.m + 1, 0), {}};
  key.u[index] = 1;
  p.add_term(key, ComplexHP(1));
  return p;
}

PolySpec PolySpec::v_variable(const VarSpec& spec, int which) {
  PolySpec p(spec);
  PolyKey key{std::vector<unsigned>(spec.m + 1, 0), {}};
  switch (which) {
    case 0: key.lambda.l0 = 1; break;
    case 1: key.lambda.ln = 1; break;
    case 2: key.lambda.ll = 1; break;
    default: throw std::invalid_argument("v variable selector must be 0, 1 or 2");
  }
  p.add_term(key, ComplexHP(1));
  return p;
}

void PolySpec::add_term(const PolyKey& key, const ComplexHP& c) {
  if (key.u.size() != spec_.m + 1) throw std::invalid_argument("u exponent vector length must be m + 1");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void PolySpec::check_compatible(const PolySpec& rhs) const {
  if (!(spec_ == rhs.spec_)) throw std::invalid_argument("PolySpec operands use different variable specs");
}

PolySpec PolySpec::operator+(const PolySpec& rhs) const {
  check_compatible(rhs);
  PolySpec out = *this;
  for (const auto& [k, c] : rhs.terms_) out.add_term(k, c);
  return out;
}

PolySpec PolySpec::operator-() const {
  PolySpec out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

PolySpec PolySpec::operator-(const PolySpec& rhs) const { return *this + (-rhs); }

PolySpec PolySpec::operator*(const PolySpec& rhs) const {
  check_compatible(rhs);
  PolySpec out(spec_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : rhs.terms_) {
      PolyKey key = ka;
      for (std::size_t i = 0; i < key.u.size(); ++i) key.u[i] += kb.u[i];
      key.lambda.l0 += kb.lambda.l0;
      key.lambda.ln += kb.lambda.ln;
      key.lambda.ll += kb.lambda.ll;
      out.add_term(key, ca * cb);
    }
  }
  return out;
}

PolySpec PolySpec::pow(unsigned e) const {
  PolySpec result = constant(spec_, ComplexHP(1));
  PolySpec base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

namespace {

std::string compact(const Real& x) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits_for_bits(x.precision()), x.get());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string coefficient_text(const ComplexHP& c) {
  if (c.im().is_zero()) return compact(c.re());
  std::string im = compact(c.im());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return "(" + compact(c.re()) + im + "i)";
}

}  // namespace

std::string render(const PolySpec& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : p.terms()) {
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < key.u.size(); ++i)
      if (key.u[i]) factors.push_back("u" + std::to_string(i) + (key.u[i] > 1 ? "^" + std::to_string(key.u[i]) : ""));
    auto add_v = [&](const char* name, unsigned e) {
      if (e) factors.push_back(std::string(name) + (e > 1 ? "^" + std::to_string(e) : ""));
    };
    add_v("v0", key.lambda.l0);
    add_v("vn", key.lambda.ln);
    add_v("vl", key.lambda.ll);

    std::string term;
    bool unit = c.im().is_zero() && c.re() == Real(1);
    if (!unit || factors.empty()) term = coefficient_text(c);
    for (const auto& f : factors) term += (term.empty() ? "" : "*") + f;
    out += (out.empty() ? "" : " + ") + term;
  }
  return out;
}

std::map<unsigned, PolySpec> homogeneous_parts(const PolySpec& poly) {
  std::map<unsigned, PolySpec> parts;
  for (const auto& [key, c] : poly.terms()) {
    unsigned p = gradings(key.lambda, poly.spec()).p;
    parts.try_emplace(p, poly.spec()).first->second.add_term(key, c);
  }
  return parts;
}

ComplexHP a_lambda(const PolySpec& poly, const LambdaTriple& lambda, std::span<const ComplexHP> u) {
  if (u.size() != poly.spec().m + 1) throw std::invalid_argument("u vector length must be m + 1");
  BitCount bits = WorkingPrecision::current();
  for (const auto& v : u) bits = std::max(bits, v.precision_bits());
  ComplexHP sum{Real::zero(bits), Real::zero(bits)};
  for (const auto& [key, c] : poly.terms()) {
    if (!(key.lambda == lambda)) continue;
    ComplexHP term = c;
    for (std::size_t i = 0; i < key.u.size(); ++i)
      if (key.u[i]) term *= pow(u[i], static_cast<long>(key.u[i]));
    sum += term;
  }
  return sum;
}

mpz_class h_expansion_coefficient(const LambdaTriple& lambda, unsigned t, const VarSpec& spec) {
  mpz_class c_n = spec.n * (spec.n - 1) / 2;
  mpz_class c_l = spec.l * (spec.l - 1) / 2;
  mpz_class total = 0;
  for (unsigned i = 0; i <= std::min(t, lambda.ln); ++i) {
    unsigned i2 = t - i;
    if (i2 > lambda.ll) continue;
    mpz_class bn, bl, pn, pl;
    mpz_bin_uiui(bn.get_mpz_t(), lambda.ln, i);
    mpz_bin_uiui(bl.get_mpz_t(), lambda.ll, i2);
    mpz_pow_ui(pn.get_mpz_t(), c_n.get_mpz_t(), i);
    mpz_pow_ui(pl.get_mpz_t(), c_l.get_mpz_t(), i2);
    total += bn * pn * bl * pl;
  }
  return total;
}

namespace {

void require_homogeneous(const PolySpec& part) {
  std::optional<unsigned> p;
  for (const auto& [key, c] : part.terms()) {
    unsigned pk = gradings(key.lambda, part.spec()).p;
    if (p && *p != pk) throw std::invalid_argument("b_hat expects a part homogeneous in |lambda|");
    p = pk;
  }
}

}  // namespace

ComplexHP b_hat(const PolySpec& part, unsigned q, unsigned t, std::span<const ComplexHP> u) {
  require_homogeneous(part);
  if (u.size() != part.spec().m + 1) throw std::invalid_argument("u vector length must be m + 1");
  BitCount bits = WorkingPrecision::current();
  for (const auto& v : u) bits = std::max(bits, v.precision_bits());
  ComplexHP sum{Real::zero(bits), Real::zero(bits)};
  // Missing a_lambda are zero, so iterating over present terms covers the sum over j.
  for (const auto& [key, c] : part.terms()) {
    if (gradings(key.lambda, part.spec()).q != q) continue;
    mpz_class weight = h_expansion_coefficient(key.lambda, t, part.spec());
    if (weight == 0) continue;
    ComplexHP term = c * Real(weight, bits);
    for (std::size_t i = 0; i < key.u.size(); ++i)
      if (key.u[i]) term *= pow(u[i], static_cast<long>(key.u[i]));
    sum += term;
  }
  return sum;
}

std::pair<unsigned, unsigned> grading_bounds(const PolySpec& part) {
  unsigned max_q = 0, max_j = 0;
  for (const auto& [key, c] : part.terms()) {
    Gradings g = gradings(key.lambda, part.spec());
    max_q = std::max(max_q, g.q);
    max_j = std::max(max_j, g.j);
  }
  return {max_q, max_j};
}

std::optional<LeadingIndex> first_nonzero_b(const PolySpec& part, std::span<const std::vector<ComplexHP>> u_samples,
                                            double threshold) {
  if (part.is_zero()) return std::nullopt;
  auto [max_q, max_j] = grading_bounds(part);
  Real limit(threshold);
  for (unsigned t = 0; t <= max_j; ++t) {
    for (unsigned q = max_q + 1; q-- > 0;) {
      for (const auto& u : u_samples)
        if (abs(b_hat(part, q, t, u)) > limit) return LeadingIndex{q, t};
    }
  }
  return std::nullopt;
}

Real envelope(unsigned q0, unsigned t0, const ComplexHP& z) {
  Real modulus = abs(z);
  if (modulus <= Real(1)) throw DomainError("envelope: requires |z| > 1");
  Real log_mod = abs(log(z));
  return pow(log_mod, static_cast<long>(q0) - 2 * static_cast<long>(t0)) / pow(modulus, static_cast<long>(t0));
}

namespace {

struct PointValues {
  std::vector<ComplexHP> zeta;
  ComplexHP v0, vn, vl;
};

// v-values are either (Gamma, Gamma^(n), Gamma^(l)) or (1, R_n, R_l).
PointValues point_values(const VarSpec& spec, const ComplexHP& z, const PrecisionConfig& cfg, bool reduced) {
  spec.validate();
  PointValues pv;
  pv.zeta = zeta_jet(z, spec.m, cfg);
  auto jet = digamma_jet(z, spec.l - 1, cfg);
  ComplexHP rn = evaluate(gamma_log_ratio(spec.n), jet);
  ComplexHP rl = evaluate(gamma_log_ratio(spec.l), jet);
  if (reduced) {
    pv.v0 = ComplexHP(Real(1).rounded(cfg.precision_bits));
    pv.vn = rn;
    pv.vl = rl;
  } else {
    ComplexHP g = gamma(z, cfg);
    pv.v0 = g;
    pv.vn = g * rn;
    pv.vl = g * rl;
  }
  return pv;
}

ComplexHP evaluate_with(const PolySpec& poly, const PointValues& pv, BitCount bits) {
  ComplexHP sum{Real::zero(bits), Real::zero(bits)};
  for (const auto& [key, c] : poly.terms()) {
    ComplexHP term = c;
    for (std::size_t i = 0; i < key.u.size(); ++i)
      if (key.u[i]) term *= pow(pv.zeta[i], static_cast<long>(key.u[i]));
    if (key.lambda.l0) term *= pow(pv.v0, static_cast<long>(key.lambda.l0));
    if (key.lambda.ln) term *= pow(pv.vn, static_cast<long>(key.lambda.ln));
    if (key.lambda.ll) term *= pow(pv.vl, static_cast<long>(key.lambda.ll));
    sum += term;
  }
  return sum;
}

}  // namespace

ComplexHP evaluate_P(const PolySpec& poly, const ComplexHP& z, const PrecisionConfig& cfg) {
  WorkingPrecision wp(cfg.precision_bits);
  return evaluate_with(poly, point_values(poly.spec(), z, cfg, false), cfg.precision_bits);
}

ComplexHP evaluate_reduced(const PolySpec& poly, const ComplexHP& z, const PrecisionConfig& cfg) {
  WorkingPrecision wp(cfg.precision_bits);
  return evaluate_with(poly, point_values(poly.spec(), z, cfg, true), cfg.precision_bits);
}

std::string to_string(Verdict v) {
  return v == Verdict::NonvanishingEvidence ? "NONVANISHING_EVIDENCE" : "INCONCLUSIVE";
}

DominanceReport falsify(const PolySpec& poly, const std::vector<double>& y_list, const PrecisionConfig& cfg,
                        std::uint64_t seed) {
  if (poly.is_zero()) throw DegenerateInput("falsify: P is the zero polynomial");
  if (y_list.empty()) throw std::invalid_argument("falsify: empty y list");
  if (!std::is_sorted(y_list.begin(), y_list.end()) || y_list.front() < 5.0)
    throw std::invalid_argument("falsify: y list must be sorted increasing with min >= 5");

  const VarSpec& spec = poly.spec();
  spec.validate();
  auto parts = homogeneous_parts(poly);
  const auto& [p0, part] = *parts.begin();

  BitCount bits = cfg.precision_bits;
  WorkingPrecision wp(bits);

  std::vector<ComplexHP> points;
  std::vector<PointValues> values;
  std::vector<std::vector<ComplexHP>> u_samples;
  for (double y : y_list) {
    ComplexHP z{Real(0.75).rounded(bits), Real(y).rounded(bits)};
    values.push_back(point_values(spec, z, cfg, true));
    u_samples.push_back(values.back().zeta);
    points.push_back(std::move(z));
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::vector<std::vector<ComplexHP>> guard_samples = u_samples;
  for (int r = 0; r < 8; ++r) {
    std::vector<ComplexHP> u;
    for (unsigned i = 0; i <= spec.m; ++i) {
      double re = coord(rng);
      double im = coord(rng);
      u.emplace_back(Real(re).rounded(bits), Real(im).rounded(bits));
    }
    guard_samples.push_back(std::move(u));
  }

  auto leading = first_nonzero_b(part, guard_samples);
  if (!leading) throw DegenerateInput("falsify: every b coefficient vanishes on all u samples");

  DominanceReport report;
  report.p0 = p0;
  report.q0 = leading->q0;
  report.t0 = leading->t0;
  std::tie(report.m_p0, report.n_p0) = grading_bounds(part);

  for (std::size_t k = 0; k < y_list.size(); ++k) {
    ComplexHP b = b_hat(part, report.q0, report.t0, u_samples[k]);
    Real measured = abs(evaluate_with(part, values[k], bits));
    Real predicted = abs(b) * envelope(report.q0, report.t0, points[k]);
    Real ratio = predicted.is_zero() ? Real(0) : measured / predicted;
    report.samples.push_back({y_list[k], measured, predicted, ratio});
    report.b_hat_value = std::move(b);
  }

  bool band = true;
  for (std::size_t k = report.samples.size() / 2; k < report.samples.size(); ++k) {
    const Real& r = report.samples[k].ratio;
    if (r < Real(kBandLow) || r > Real(kBandHigh)) band = false;
  }
  report.verdict = band ? Verdict::NonvanishingEvidence : Verdict::Inconclusive;
  return report;
}

}  // namespace gz
