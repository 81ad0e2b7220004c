#include "puiseux/primes.hpp"

#include <cmath>

namespace puiseux {

namespace {
constexpr std::int64_t kTrialLimit = 1'000'000;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::int64_t> first_primes(std::size_t count) {
  if (count == 0) return {};
  // p_n < n (ln n + ln ln n) for n >= 6.
  double n = static_cast<double>(count);
  auto bound = static_cast<std::int64_t>(
      count < 6 ? 15 : n * (std::log(n) + std::log(std::log(n))) + 1);
  auto ps = primes_up_to(bound);
  ps.resize(count);
  return ps;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::map<BigInt, unsigned> factorize(const BigInt& n) {
  if (n < 1) throw InputError("factorize expects a positive integer");
  std::map<BigInt, unsigned> out;
  BigInt rest = n;
  for (long d = 2; d <= kTrialLimit && BigInt(d) * d <= rest; ++d) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(d)) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(d)) != 0) {
      rest /= d;
      ++e;
    }
    out[BigInt(d)] = e;
  }
  if (rest > 1) {
    const BigInt trial_sq = BigInt(kTrialLimit) * kTrialLimit;
    if (rest >= trial_sq) {
      throw InputError("cannot factor " + n.get_str() + ": cofactor beyond trial-division reach");
    }
    out[rest] += 1;
  }
  return out;
}

}  // namespace puiseux
