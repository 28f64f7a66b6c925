#include "gz/diffpoly.hpp"

#include "gz/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>

namespace gz {

JetExponents::JetExponents(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (const auto& [k, e] : entries) {
    if (e == 0) continue;
    if (!entries_.empty() && entries_.back().first == k)
      entries_.back().second += e;
    else
      entries_.emplace_back(k, e);
  }
}

std::uint64_t JetExponents::weight() const {
  std::uint64_t w = 0;
  for (const auto& [k, e] : entries_) w += static_cast<std::uint64_t>(e) * (k + 1);
  return w;
}

std::uint32_t JetExponents::exponent(std::uint32_t order) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{order, 0});
  return (it != entries_.end() && it->first == order) ? it->second : 0;
}

JetExponents JetExponents::operator*(const JetExponents& rhs) const {
  std::vector<Entry> merged = entries_;
  merged.insert(merged.end(), rhs.entries_.begin(), rhs.entries_.end());
  return JetExponents(std::move(merged));
}

bool CanonicalOrder::operator()(const JetExponents& a, const JetExponents& b) const {
  auto wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  return std::lexicographical_compare(eb.rbegin(), eb.rend(), ea.rbegin(), ea.rend());
}

DiffPoly DiffPoly::constant(const mpz_class& c) {
  DiffPoly p;
  p.add_term(JetExponents{}, c);
  return p;
}

DiffPoly DiffPoly::variable(std::uint32_t order) {
  DiffPoly p;
  p.add_term(JetExponents({{order, 1}}), 1);
  return p;
}

DiffPoly DiffPoly::from_terms(const std::vector<JetMonomial>& terms) {
  DiffPoly p;
  for (const auto& t : terms) p.add_term(t.exponents, t.coefficient);
  return p;
}

void DiffPoly::add_term(const JetExponents& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class DiffPoly::coefficient(const JetExponents& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

long DiffPoly::max_order() const {
  long order = -1;
  for (const auto& [m, c] : terms_) order = std::max(order, m.max_order());
  return order;
}

DiffPoly DiffPoly::operator+(const DiffPoly& rhs) const {
  DiffPoly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

DiffPoly DiffPoly::operator-(const DiffPoly& rhs) const { return *this + (-rhs); }

DiffPoly DiffPoly::operator*(const DiffPoly& rhs) const {
  DiffPoly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

DiffPoly differentiate(const DiffPoly& p) {
  std::vector<JetMonomial> produced;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [k, e] : m.entries()) {
      std::vector<JetExponents::Entry> next = m.entries();
      for (auto& entry : next)
        if (entry.first == k) entry.second -= 1;
      next.emplace_back(k + 1, 1);
      produced.push_back({JetExponents(std::move(next)), c * e});
    }
  }
  return DiffPoly::from_terms(produced);
}

namespace {

class RatioTable {
 public:
  const DiffPoly& get(unsigned n) {
    std::lock_guard lock(mutex_);
    if (table_.empty()) table_.push_back(DiffPoly::constant(1));
    const DiffPoly f = DiffPoly::variable(0);
    while (table_.size() <= n) {
      const DiffPoly& prev = table_.back();
      table_.push_back(differentiate(prev) + prev * f);
    }
    return table_[n];
  }

 private:
  std::mutex mutex_;
  // deque keeps references stable while the table grows
  std::deque<DiffPoly> table_;
};

RatioTable& ratio_table() {
  static RatioTable table;
  return table;
}

}  // namespace

const DiffPoly& gamma_log_ratio(unsigned n, unsigned limit) {
  if (n > limit)
    throw LimitExceeded("gamma_log_ratio: n = " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
  return ratio_table().get(n);
}

mpz_class c_coefficient(unsigned n) {
  if (n < 2) return 0;
  std::vector<JetExponents::Entry> e{{1, 1}};
  if (n > 2) e.emplace_back(0, n - 2);
  return gamma_log_ratio(n).coefficient(JetExponents(std::move(e)));
}

mpz_class coefficient_sum(const DiffPoly& p) {
  mpz_class sum = 0;
  for (const auto& [m, c] : p.terms()) sum += c;
  return sum;
}

ComplexHP evaluate(const DiffPoly& p, std::span<const ComplexHP> jet) {
  long need = p.max_order();
  if (need >= static_cast<long>(jet.size()))
    throw MissingJetValue("evaluate: jet has " + std::to_string(jet.size()) + " entries, order " +
                          std::to_string(need) + " required");
  BitCount bits = WorkingPrecision::current();
  for (const auto& v : jet) bits = std::max(bits, v.precision_bits());

  ComplexHP sum{Real::zero(bits), Real::zero(bits)};
  for (const auto& [m, c] : p.terms()) {
    ComplexHP term{Real(c, bits), Real::zero(bits)};
    for (const auto& [k, e] : m.entries()) term *= pow(jet[k], static_cast<long>(e));
    sum += term;
  }
  return sum;
}

namespace {

std::string variable_name(std::uint32_t k) {
  if (k <= 3) return "f" + std::string(k, '\'');
  return "f^(" + std::to_string(k) + ")";
}

std::string monomial_text(const JetExponents& m) {
  std::string out;
  for (const auto& [k, e] : m.entries()) {
    if (!out.empty()) out += '*';
    out += variable_name(k);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string render(const DiffPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    mpz_class mag = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (m.is_constant()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += monomial_text(m);
    }
  }
  return out;
}

namespace {

class DiffPolyParser {
 public:
  explicit DiffPolyParser(std::string_view text) : text_(text) {}

  DiffPoly parse() {
    DiffPoly result;
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    result = term(negative);
    for (;;) {
      skip_space();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      result = result + term(op == '-');
    }
    return result;
  }

 private:
  DiffPoly term(bool negative) {
    skip_space();
    mpz_class coef = 1;
    std::vector<JetExponents::Entry> factors;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = mpz_class(digits());
      skip_space();
      if (peek() == '*') {
        ++pos_;
        factor(factors);
      }
    } else {
      factor(factors);
    }
    for (;;) {
      std::size_t save = pos_;
      skip_space();
      if (peek() != '*') {
        pos_ = save;
        break;
      }
      ++pos_;
      factor(factors);
    }
    if (negative) coef = -coef;
    return DiffPoly::from_terms({{JetExponents(std::move(factors)), coef}});
  }

  void factor(std::vector<JetExponents::Entry>& factors) {
    skip_space();
    if (peek() != 'f') fail("expected jet variable 'f'");
    ++pos_;
    std::uint32_t order = 0;
    if (peek() == '^' && peek(1) == '(') {
      pos_ += 2;
      order = to_u32(digits());
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else {
      while (peek() == '\'') {
        ++order;
        ++pos_;
      }
    }
    std::uint32_t e = 1;
    if (peek() == '^') {
      ++pos_;
      e = to_u32(digits());
      if (e == 0) fail("zero exponent");
    }
    factors.emplace_back(order, e);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint32_t to_u32(const std::string& s) {
    if (s.size() > 9) fail("integer too large");
    return static_cast<std::uint32_t>(std::stoul(s));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, 1, static_cast<int>(pos_) + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DiffPoly parse_diffpoly(std::string_view text) {
  DiffPoly out = DiffPolyParser(text).parse();
  return out;
}

}  // namespace gz
