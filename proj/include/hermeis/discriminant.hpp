#pragma once

#include <vector>

#include "hermeis/characters.hpp"
#include "hermeis/rational.hpp"

namespace hermeis::arith {

// d = 1, or the discriminant of a quadratic field: d = 1 mod 4 squarefree,
// or d = 4m with m squarefree and m = 2,3 mod 4.
bool is_fundamental_discriminant(Int d);

// Unique factorization of a fundamental discriminant into prime
// discriminants (-4, +-8, or (-1)^((p-1)/2) p for odd primes p), returned in
// decreasing order. For d = 1 the list is empty.
std::vector<Int> factor_prime_discriminants(Int d);

// A validated fundamental discriminant with its prime-discriminant
// factorization attached.
class Discriminant {
 public:
  explicit Discriminant(Int value);

  Int value() const { return value_; }
  const std::vector<Int>& prime_factors() const { return factors_; }
  int chi(Int n) const { return kronecker(value_, n); }

  friend bool operator==(const Discriminant& a, const Discriminant& b) {
    return a.value_ == b.value_;
  }

 private:
  Int value_;
  std::vector<Int> factors_;
};

// All ordered pairs (d1, d2) of fundamental discriminants with d1*d2 = d;
// there are exactly 2^r of them, enumerated by subsets of the prime factors.
std::vector<std::pair<Int, Int>> fundamental_divisor_pairs(const Discriminant& d);

// All fundamental discriminants delta < 0 with min_abs <= |delta| <= max_abs,
// in increasing |delta| order.
std::vector<Int> negative_fundamental_discriminants(Int min_abs, Int max_abs);

}  // namespace hermeis::arith
