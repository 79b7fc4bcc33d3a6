#include "hermeis/intmath.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermeis {

Int isqrt(Int n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  if (n == 0) return 0;
  mpz_class m(static_cast<long>(n));
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
  return static_cast<Int>(r.get_si());
}

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

ExtendedGcd extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t;
    t = old_r - q * r; old_r = r; r = t;
    t = old_x - q * x; old_x = x; x = t;
    t = old_y - q * y; old_y = y; y = t;
  }
  if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
  return {old_r, old_x, old_y};
}

std::vector<Int> divisors(Int n) {
  if (n < 1) throw std::domain_error("divisors: argument must be positive");
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n < 1) throw std::domain_error("factorize: argument must be positive");
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_squarefree(Int n) {
  if (n < 0) n = -n;
  if (n == 0) return false;
  for (auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

int moebius(Int n) {
  if (n < 1) throw std::domain_error("moebius: argument must be positive");
  int sign = 1;
  for (auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

mpz_class sigma_power(Int n, unsigned long e) {
  mpz_class s = 0;
  for (Int d : divisors(n)) s += int_pow(mpz_class(static_cast<long>(d)), e);
  return s;
}

}  // namespace hermeis
