#include "divgraph/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace divgraph {

namespace {

bool fits_int64(__int128 v) {
  return v >= static_cast<__int128>(INT64_MIN) && v <= static_cast<__int128>(INT64_MAX);
}

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

SpfSieve::SpfSieve(std::int64_t limit, std::int64_t cap) : limit_(limit) {
  if (limit < 2 || limit > cap) {
    throw std::invalid_argument("sieve limit " + std::to_string(limit) +
                                " outside [2, " + std::to_string(cap) + "]");
  }
  spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
  spf_[1] = 1;
  std::vector<std::uint32_t> primes;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf_[i] || p > limit / i) break;
      spf_[static_cast<std::size_t>(p) * i] = p;
    }
  }
}

std::int64_t SpfSieve::spf(std::int64_t m) const {
  if (m < 1 || m > limit_) {
    throw std::out_of_range("spf query " + std::to_string(m) + " exceeds sieve limit " +
                            std::to_string(limit_));
  }
  return spf_[static_cast<std::size_t>(m)];
}

bool SpfSieve::is_prime(std::int64_t m) const { return m >= 2 && spf(m) == m; }

Factorization factorize(std::int64_t n, const SpfSieve& sieve) {
  if (n < 1 || n > sieve.limit()) {
    throw std::out_of_range("factorize(" + std::to_string(n) + ") outside [1, " +
                            std::to_string(sieve.limit()) + "]");
  }
  Factorization f;
  f.n = n;
  while (n > 1) {
    std::int64_t p = sieve.spf(n);
    int exponent = 0;
    while (n % p == 0) {
      n /= p;
      ++exponent;
    }
    f.factors.push_back({p, exponent});
  }
  return f;
}

std::int64_t divisor_count(const Factorization& f) {
  std::int64_t count = 1;
  for (const auto& pp : f.factors) count *= pp.exponent + 1;
  return count;
}

std::int64_t divisor_count(std::int64_t n, const SpfSieve& sieve) {
  if (n < 1 || n > sieve.limit()) {
    throw std::out_of_range("divisor_count(" + std::to_string(n) + ") outside [1, " +
                            std::to_string(sieve.limit()) + "]");
  }
  std::int64_t count = 1;
  while (n > 1) {
    std::int64_t p = sieve.spf(n);
    int exponent = 0;
    while (n % p == 0) {
      n /= p;
      ++exponent;
    }
    count *= exponent + 1;
  }
  return count;
}

std::int64_t divisor_count_sum_over_divisors(const Factorization& f) {
  // (j+1)(j+2) is always even, so each factor divides out exactly.
  __int128 product = 1;
  for (const auto& pp : f.factors) {
    std::int64_t j = pp.exponent;
    product *= static_cast<__int128>(j + 1) * (j + 2) / 2;
    if (!fits_int64(product)) {
      throw std::overflow_error("divisor-count sum over divisors of " + std::to_string(f.n) +
                                " exceeds 64-bit range");
    }
  }
  return static_cast<std::int64_t>(product);
}

std::vector<std::int64_t> divisors(std::int64_t n, const SpfSieve& sieve) {
  Factorization f = factorize(n, sieve);
  std::vector<std::int64_t> out{1};
  for (const auto& pp : f.factors) {
    std::size_t existing = out.size();
    std::int64_t power = 1;
    for (int j = 1; j <= pp.exponent; ++j) {
      power *= pp.prime;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t dirichlet_sum(std::int64_t n_max) {
  if (n_max < 1) throw std::out_of_range("dirichlet_sum requires N >= 1");
  // Pair (n, floor(N/n)) across the hyperbola: both coordinates run over
  // 1..sqrt(N), and the square region is counted twice.
  std::int64_t k = isqrt(n_max);
  unsigned __int128 total = 0;
  for (std::int64_t n = 1; n <= k; ++n) total += static_cast<unsigned __int128>(n_max / n);
  total = 2 * total - static_cast<unsigned __int128>(k) * k;
  if (total > static_cast<unsigned __int128>(INT64_MAX)) {
    throw std::overflow_error("dirichlet_sum(" + std::to_string(n_max) +
                              ") exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(total);
}

}  // namespace divgraph
