#pragma once

#include <vector>

namespace tsigma {

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime divisors, ascending.
inline std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline int multiplicity(int n, int p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

/// ∏ p^v_p(n) over the given primes.
inline int part_for_primes(int n, const std::vector<int>& primes) {
  int m = 1;
  for (int p : primes) {
    int q = n;
    while (q % p == 0) {
      q /= p;
      m *= p;
    }
  }
  return m;
}

}  // namespace tsigma
