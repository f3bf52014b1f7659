#pragma once

#include <cstdint>
#include <vector>

namespace divgraph {

/// Smallest-prime-factor table for 1..limit, built by a linear sieve.
/// Immutable after construction and safe to share across threads.
class SpfSieve {
public:
  /// Memory-bounded ceiling on the sieve size (one 32-bit entry per integer).
  static constexpr std::int64_t kDefaultCap = 100'000'000;

  /// Throws std::invalid_argument when limit is outside [2, cap].
  explicit SpfSieve(std::int64_t limit, std::int64_t cap = kDefaultCap);

  std::int64_t limit() const { return limit_; }

  /// Smallest prime factor of m; spf(1) == 1 by convention.
  std::int64_t spf(std::int64_t m) const;

  /// True iff 2 <= m <= limit and m is prime.
  bool is_prime(std::int64_t m) const;

private:
  std::int64_t limit_;
  std::vector<std::uint32_t> spf_;
};

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-power decomposition of n, primes strictly increasing.
/// n == 1 has an empty factor list.
struct Factorization {
  std::int64_t n = 1;
  std::vector<PrimePower> factors;
};

/// Throws std::out_of_range unless 1 <= n <= sieve.limit().
Factorization factorize(std::int64_t n, const SpfSieve& sieve);

/// s(n): number of divisors of n including n itself; s(1) == 1.
std::int64_t divisor_count(const Factorization& f);

/// Same as above without materializing the factor list.
std::int64_t divisor_count(std::int64_t n, const SpfSieve& sieve);

/// Sum of s(m) over all divisors m of n, via the closed-form product
/// prod (j_i + 1)(j_i + 2) / 2 over the prime exponents j_i.
/// Throws std::overflow_error if the product exceeds 64-bit range.
std::int64_t divisor_count_sum_over_divisors(const Factorization& f);

/// All divisors of n in ascending order, including 1 and n.
std::vector<std::int64_t> divisors(std::int64_t n, const SpfSieve& sieve);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// D(N) = sum_{n=1..N} floor(N/n), computed in O(sqrt N) by pairing
/// divisors across the hyperbola. Equals sum_{n<=N} s(n).
/// Throws std::overflow_error if D(N) exceeds 64-bit range.
std::int64_t dirichlet_sum(std::int64_t n_max);

}  // namespace divgraph
