#pragma once

// Exact differential polynomials in the jet variables f, f', f'', ... of the
// digamma function f = Gamma'/Gamma, with the formal derivation
// d(f^(k)) = f^(k+1).

#include "gz/complex.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gz {

/// Exponent map of a jet monomial: (derivative order k, exponent e_k) pairs,
/// sorted by k ascending, every e_k > 0. Empty means the constant monomial.
class JetExponents {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;

  JetExponents() = default;
  /// Accepts unsorted pairs; merges repeated orders and drops zero exponents.
  explicit JetExponents(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_constant() const { return entries_.empty(); }

  /// Sum of e_k * (k + 1).
  std::uint64_t weight() const;
  /// Exponent of f itself (order 0).
  std::uint32_t f_degree() const { return exponent(0); }
  std::uint32_t exponent(std::uint32_t order) const;
  /// Highest derivative order present, or -1 for the constant monomial.
  long max_order() const { return entries_.empty() ? -1 : static_cast<long>(entries_.back().first); }

  JetExponents operator*(const JetExponents& rhs) const;

  friend bool operator==(const JetExponents&, const JetExponents&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Canonical monomial order: weight ascending, then the (k, e_k) pairs read
/// from the highest order down, compared lexicographically, larger first.
struct CanonicalOrder {
  bool operator()(const JetExponents& a, const JetExponents& b) const;
};

struct JetMonomial {
  JetExponents exponents;
  mpz_class coefficient;
};

class DiffPoly {
 public:
  using TermMap = std::map<JetExponents, mpz_class, CanonicalOrder>;

  DiffPoly() = default;
  static DiffPoly constant(const mpz_class& c);
  /// The single jet variable f^(order).
  static DiffPoly variable(std::uint32_t order);
  static DiffPoly from_terms(const std::vector<JetMonomial>& terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of the given monomial (0 when absent).
  mpz_class coefficient(const JetExponents& m) const;
  /// Highest derivative order appearing, or -1 for constants.
  long max_order() const;

  DiffPoly operator+(const DiffPoly& rhs) const;
  DiffPoly operator-(const DiffPoly& rhs) const;
  DiffPoly operator*(const DiffPoly& rhs) const;
  DiffPoly operator-() const;

  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

 private:
  void add_term(const JetExponents& m, const mpz_class& c);

  TermMap terms_;
};

/// Formal z-derivative with the Leibniz rule.
DiffPoly differentiate(const DiffPoly& p);

inline constexpr unsigned kDefaultRatioLimit = 64;

/// R_n with Gamma^(n) = Gamma * R_n, from R_0 = 1 and R_{n+1} = R_n' + R_n*f.
/// Results are memoized process-wide. Throws LimitExceeded when n > limit.
const DiffPoly& gamma_log_ratio(unsigned n, unsigned limit = kDefaultRatioLimit);

/// Coefficient of f^(n-2) * f' in R_n; 0 for n = 1.
mpz_class c_coefficient(unsigned n);

/// Sum of all coefficients (every jet variable set to 1).
mpz_class coefficient_sum(const DiffPoly& p);

/// Substitutes f^(k) <- jet[k]. Throws MissingJetValue if jet is too short.
ComplexHP evaluate(const DiffPoly& p, std::span<const ComplexHP> jet);

/// Renders e.g. "f''' + 4*f*f'' + 3*f'^2 + 6*f^2*f' + f^4".
std::string render(const DiffPoly& p);
/// Inverse of render. Throws ParseError with a 1-based column.
DiffPoly parse_diffpoly(std::string_view text);

}  // namespace gz
