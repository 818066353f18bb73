#pragma once

// Elementary integer number theory on machine words.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace supercayley::arith {

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

inline std::int64_t powmod(std::int64_t base, std::uint64_t exp, std::int64_t m) {
  std::int64_t result = 1 % m;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorization as (prime, exponent) pairs, primes ascending.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

inline int mobius(std::int64_t n) {
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

/// Jacobi symbol (a/m) for odd m > 0, by quadratic reciprocity.
inline int jacobi_symbol(std::int64_t a, std::int64_t m) {
  a = mod(a, m);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = m % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

}  // namespace supercayley::arith
