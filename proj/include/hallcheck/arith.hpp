#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace hallcheck {

inline bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime divisors of n, ascending.
inline std::set<long> prime_divisors(long n) {
  std::set<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.insert(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.insert(n);
  return out;
}

/// Largest power of p dividing n.
inline long p_part(long n, long p) {
  long result = 1;
  while (n % p == 0) {
    n /= p;
    result *= p;
  }
  return result;
}

/// Product of p_part(n, p) over all p in pi.
inline long pi_part(long n, const std::set<long>& pi) {
  long result = 1;
  for (long p : pi) result *= p_part(n, p);
  return result;
}

/// If n is a power p^k with k >= 1, returns p; otherwise 0.
inline long prime_power_base(long n) {
  if (n < 2) return 0;
  auto ps = prime_divisors(n);
  return ps.size() == 1 ? *ps.begin() : 0;
}

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace hallcheck
