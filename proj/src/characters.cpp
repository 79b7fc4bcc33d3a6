#include "hermeis/characters.hpp"

#include <stdexcept>

#include "hermeis/intmath.hpp"

namespace hermeis::arith {

int kronecker(Int d, Int n) {
  Int m4 = mod_norm(d, 4);
  if (m4 != 0 && m4 != 1)
    throw std::invalid_argument("kronecker: modulus must be 0 or 1 mod 4");

  Int a = d;
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && n % 2 == 0) return 0;

  int k = 1;
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v % 2 == 1) {
    Int r = mod_norm(a, 8);
    if (r == 3 || r == 5) k = -k;
  }
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  // n odd and positive from here; standard reciprocity loop.
  a = mod_norm(a, n);
  while (a != 0) {
    v = 0;
    while (a % 2 == 0) {
      a /= 2;
      ++v;
    }
    if (v % 2 == 1) {
      Int r = n % 8;
      if (r == 3 || r == 5) k = -k;
    }
    if (a % 4 == 3 && n % 4 == 3) k = -k;
    Int t = a;
    a = n % t;
    n = t;
  }
  return n == 1 ? k : 0;
}

}  // namespace hermeis::arith
