#include "gz/bernoulli.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace gz {

namespace {

// Tangent numbers T_1..T_n by the in-place recurrence of Brent and Harvey.
std::vector<mpz_class> tangent_numbers(unsigned n) {
  std::vector<mpz_class> t(n + 1);
  if (n == 0) return t;
  t[1] = 1;
  for (unsigned k = 2; k <= n; ++k) t[k] = (k - 1) * t[k - 1];
  for (unsigned k = 2; k <= n; ++k)
    for (unsigned j = k; j <= n; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
  return t;
}

class BernoulliCache {
 public:
  mpq_class get(unsigned k) {
    std::lock_guard lock(mutex_);
    if (k >= values_.size()) grow(std::max<unsigned>(k, 2 * static_cast<unsigned>(values_.size())));
    return values_[k];
  }

 private:
  void grow(unsigned n) {
    auto t = tangent_numbers(n);
    values_.assign(n + 1, mpq_class(0));
    for (unsigned k = 1; k <= n; ++k) {
      // B_{2k} = (-1)^(k-1) * 2k * T_k / (4^k (4^k - 1))
      mpz_class four_k;
      mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
      mpq_class b(2 * k * t[k], four_k * (four_k - 1));
      b.canonicalize();
      values_[k] = (k % 2 == 1) ? b : mpq_class(-b);
    }
  }

  std::mutex mutex_;
  std::vector<mpq_class> values_;
};

}  // namespace

mpq_class bernoulli_even(unsigned k) {
  if (k == 0) throw std::invalid_argument("bernoulli_even: index must be >= 1");
  static BernoulliCache cache;
  return cache.get(k);
}

}  // namespace gz
