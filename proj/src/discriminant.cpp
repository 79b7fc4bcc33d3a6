#include "hermeis/discriminant.hpp"

#include <algorithm>
#include <stdexcept>

#include "hermeis/intmath.hpp"

namespace hermeis::arith {

bool is_fundamental_discriminant(Int d) {
  if (d == 1) return true;
  if (d == 0) return false;
  Int m4 = mod_norm(d, 4);
  if (m4 == 1) return is_squarefree(d);
  if (m4 == 0) {
    Int m = d / 4;
    Int mm = mod_norm(m, 4);
    return (mm == 2 || mm == 3) && is_squarefree(m);
  }
  return false;
}

std::vector<Int> factor_prime_discriminants(Int d) {
  if (!is_fundamental_discriminant(d))
    throw std::invalid_argument("factor_prime_discriminants: not a fundamental discriminant");
  std::vector<Int> factors;
  if (d == 1) return factors;
  Int odd_product = 1;
  for (auto& [p, e] : factorize(d < 0 ? -d : d)) {
    if (p == 2) continue;
    Int pstar = (mod_norm(p, 4) == 1) ? p : -p;
    factors.push_back(pstar);
    odd_product *= pstar;
  }
  Int two_part = d / odd_product;  // 1, -4, 8 or -8
  if (two_part != 1) factors.push_back(two_part);
  std::sort(factors.begin(), factors.end(), std::greater<Int>());
  return factors;
}

Discriminant::Discriminant(Int value)
    : value_(value), factors_(factor_prime_discriminants(value)) {}

std::vector<std::pair<Int, Int>> fundamental_divisor_pairs(const Discriminant& d) {
  const auto& f = d.prime_factors();
  std::size_t r = f.size();
  std::vector<std::pair<Int, Int>> pairs;
  pairs.reserve(std::size_t{1} << r);
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    Int d1 = 1;
    for (std::size_t j = 0; j < r; ++j)
      if (mask & (std::size_t{1} << j)) d1 *= f[j];
    pairs.emplace_back(d1, d.value() / d1);
  }
  return pairs;
}

std::vector<Int> negative_fundamental_discriminants(Int min_abs, Int max_abs) {
  std::vector<Int> out;
  if (min_abs < 1) min_abs = 1;
  for (Int a = min_abs; a <= max_abs; ++a)
    if (is_fundamental_discriminant(-a)) out.push_back(-a);
  return out;
}

}  // namespace hermeis::arith
