#pragma once

#include <utility>
#include <vector>

#include "hermeis/rational.hpp"

namespace hermeis {

// Floor division for b > 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if (a % b < 0) --q;
  return q;
}

inline Int mod_norm(Int a, Int b) { return a - b * floor_div(a, b); }

// Largest s with s*s <= n; n >= 0.
Int isqrt(Int n);

Int gcd(Int a, Int b);

// g = gcd(a, b) together with x, y solving a*x + b*y = g.
struct ExtendedGcd {
  Int g, x, y;
};
ExtendedGcd extended_gcd(Int a, Int b);

// Positive divisors in increasing order; n >= 1.
std::vector<Int> divisors(Int n);

// (prime, exponent) pairs by trial division; n >= 1.
std::vector<std::pair<Int, int>> factorize(Int n);

bool is_squarefree(Int n);

int moebius(Int n);

// sigma_e(n) = sum of d^e over positive divisors d of n.
mpz_class sigma_power(Int n, unsigned long e);

}  // namespace hermeis
