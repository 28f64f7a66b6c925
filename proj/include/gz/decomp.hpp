#pragma once

// Triple-index decomposition of a candidate polynomial
//   P(u_0..u_m; v_0, v_n, v_l) = sum a_lambda(u) v_0^l0 v_n^ln v_l^ll
// and the dominance analysis of P(zeta-jet; Gamma, Gamma^(n), Gamma^(l))
// along the line z = 3/4 + iy.

#include "gz/complex.hpp"
#include "gz/specfun.hpp"

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gz {

/// Exponents of v_0, v_n, v_l.
struct LambdaTriple {
  unsigned l0 = 0;
  unsigned ln = 0;
  unsigned ll = 0;

  friend auto operator<=>(const LambdaTriple&, const LambdaTriple&) = default;
};

/// Highest zeta derivative m and the Gamma derivative orders 1 <= n < l.
struct VarSpec {
  unsigned m = 0;
  unsigned n = 1;
  unsigned l = 2;

  /// Throws std::invalid_argument unless 1 <= n < l.
  void validate() const;
  friend bool operator==(const VarSpec&, const VarSpec&) = default;
};

/// |lambda|, |lambda|*, |lambda|**.
struct Gradings {
  unsigned p = 0;
  unsigned q = 0;
  unsigned j = 0;

  friend bool operator==(const Gradings&, const Gradings&) = default;
};

Gradings gradings(const LambdaTriple& lambda, const VarSpec& spec);

/// Inverts gradings by Cramer's rule; nullopt when the solution is not a
/// triple of non-negative integers.
std::optional<LambdaTriple> lambda_from_pqj(unsigned p, unsigned q, unsigned j, const VarSpec& spec);

/// Coefficient matrix of the grading system, rows (|.|, |.|*, |.|**).
std::array<std::array<long, 3>, 3> grading_matrix(const VarSpec& spec);
/// Determinant of a 3x3 integer matrix by cofactor expansion.
long determinant(const std::array<std::array<long, 3>, 3>& b);

struct PolyKey {
  std::vector<unsigned> u;  // exponents of u_0..u_m
  LambdaTriple lambda;

  friend auto operator<=>(const PolyKey&, const PolyKey&) = default;
};

/// Polynomial with constant complex coefficients; zero coefficients are
/// never stored.
class PolySpec {
 public:
  using TermMap = std::map<PolyKey, ComplexHP>;

  explicit PolySpec(VarSpec spec) : spec_(spec) {}

  static PolySpec constant(const VarSpec& spec, const ComplexHP& c);
  static PolySpec u_variable(const VarSpec& spec, unsigned index);
  /// which: 0 -> v_0, 1 -> v_n, 2 -> v_l.
  static PolySpec v_variable(const VarSpec& spec, int which);

  const VarSpec& spec() const { return spec_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const PolyKey& key, const ComplexHP& c);

  PolySpec operator+(const PolySpec& rhs) const;
  PolySpec operator-(const PolySpec& rhs) const;
  PolySpec operator*(const PolySpec& rhs) const;
  PolySpec operator-() const;
  PolySpec pow(unsigned e) const;

  friend bool operator==(const PolySpec&, const PolySpec&) = default;

 private:
  void check_compatible(const PolySpec& rhs) const;

  VarSpec spec_;
  TermMap terms_;
};

/// e.g. "(2+0i)*u0*v0^2 + vn*vl".
std::string render(const PolySpec& p);

/// P split by |lambda| = p; zero parts are omitted.
std::map<unsigned, PolySpec> homogeneous_parts(const PolySpec& poly);

/// a_lambda(u) for one lambda.
ComplexHP a_lambda(const PolySpec& poly, const LambdaTriple& lambda, std::span<const ComplexHP> u);

/// Coefficient of H^t in (1 + c_n H)^ln (1 + c_l H)^ll with c_k = k(k-1)/2.
mpz_class h_expansion_coefficient(const LambdaTriple& lambda, unsigned t, const VarSpec& spec);

/// b_{q,t}(u) in the eps -> 0 limit. P_p must be homogeneous in |lambda|.
ComplexHP b_hat(const PolySpec& part, unsigned q, unsigned t, std::span<const ComplexHP> u);

/// Largest |lambda|* and |lambda|** among the terms (M_p, N_p).
std::pair<unsigned, unsigned> grading_bounds(const PolySpec& part);

struct LeadingIndex {
  unsigned q0 = 0;
  unsigned t0 = 0;
  friend bool operator==(const LeadingIndex&, const LeadingIndex&) = default;
};

inline constexpr double kNonzeroThreshold = 1e-30;

/// First (q, t) in the order t = 0..N (outer), q = M..0 (inner) whose
/// b_hat exceeds `threshold` in modulus at any of the u samples; nullopt when
/// all vanish.
std::optional<LeadingIndex> first_nonzero_b(const PolySpec& part, std::span<const std::vector<ComplexHP>> u_samples,
                                            double threshold = kNonzeroThreshold);

/// |log z|^(q0 - 2 t0) / |z|^t0. Requires |z| > 1.
Real envelope(unsigned q0, unsigned t0, const ComplexHP& z);

/// P(zeta, ..., zeta^(m); Gamma, Gamma^(n), Gamma^(l))(z).
ComplexHP evaluate_P(const PolySpec& poly, const ComplexHP& z, const PrecisionConfig& cfg);

/// P(zeta, ..., zeta^(m); 1, Gamma^(n)/Gamma, Gamma^(l)/Gamma)(z).
ComplexHP evaluate_reduced(const PolySpec& poly, const ComplexHP& z, const PrecisionConfig& cfg);

enum class Verdict { NonvanishingEvidence, Inconclusive };

std::string to_string(Verdict v);

struct DominanceSample {
  double y = 0;
  Real measured;   // |P_p0(...; 1, Gamma^(n)/Gamma, Gamma^(l)/Gamma)(3/4 + iy)|
  Real predicted;  // |b_hat(q0, t0)(gamma(y))| * envelope(q0, t0, 3/4 + iy)
  Real ratio;      // measured / predicted
};

struct DominanceReport {
  unsigned p0 = 0;
  unsigned q0 = 0;
  unsigned t0 = 0;
  unsigned m_p0 = 0;
  unsigned n_p0 = 0;
  ComplexHP b_hat_value;  // at the last sample
  std::vector<DominanceSample> samples;
  Verdict verdict = Verdict::Inconclusive;
};

inline constexpr double kBandLow = 0.25;
inline constexpr double kBandHigh = 4.0;

/// Numeric dominance evidence along z = 3/4 + iy for the lowest nonzero
/// homogeneous part of P. Throws DegenerateInput for the zero polynomial or
/// when every b_hat vanishes on all u samples.
DominanceReport falsify(const PolySpec& poly, const std::vector<double>& y_list, const PrecisionConfig& cfg,
                        std::uint64_t seed = 0);

}  // namespace gz
