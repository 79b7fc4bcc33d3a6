#include "hermeis/zeta.hpp"

#include <stdexcept>

namespace hermeis::arith {

ZetaEnclosure zeta_enclosure(unsigned s, unsigned terms) {
  if (s < 2) throw std::invalid_argument("zeta_enclosure: s must be >= 2");
  if (terms < 1) throw std::invalid_argument("zeta_enclosure: need at least one term");
  Rational lower = 0;
  for (unsigned n = 1; n <= terms; ++n) {
    mpz_class den = int_pow(mpz_class(n), s);
    lower += make_rational(mpz_class(1), den);
  }
  // sum_{n > N} n^-s < integral_N^inf x^-s dx = N^(1-s)/(s-1)
  mpz_class tail_den = int_pow(mpz_class(terms), s - 1) * (s - 1);
  Rational upper = lower + make_rational(mpz_class(1), tail_den);
  return {lower, upper};
}

ZetaEnclosure zeta_enclosure_sharp(unsigned s, unsigned terms) {
  ZetaEnclosure z = zeta_enclosure(s, terms);
  mpz_class tail_den = int_pow(mpz_class(terms + 1), s - 1) * (s - 1);
  return {z.lower + make_rational(mpz_class(1), tail_den), z.upper};
}

ZetaEnclosure pi_squared_enclosure(unsigned terms) {
  ZetaEnclosure z = zeta_enclosure(2, terms);
  return {6 * z.lower, 6 * z.upper};
}

namespace {

// Alternating partial sums of atan(x) for 0 < x < 1: even cuts sit below the
// limit, odd cuts above.
ZetaEnclosure arctan_enclosure(const Rational& x, unsigned pairs) {
  Rational lower = 0;
  Rational x2 = x * x;
  Rational power = x;
  for (unsigned j = 0; j < 2 * pairs; ++j) {
    Rational term = power / rational_of(2 * static_cast<Int>(j) + 1);
    lower += (j % 2 == 0) ? term : -term;
    power *= x2;
  }
  Rational upper = lower + power / rational_of(4 * static_cast<Int>(pairs) + 1);
  return {lower, upper};
}

}  // namespace

ZetaEnclosure pi_enclosure() {
  ZetaEnclosure a = arctan_enclosure(make_rational(1, 5), 16);
  ZetaEnclosure b = arctan_enclosure(make_rational(1, 239), 8);
  return {16 * a.lower - 4 * b.upper, 16 * a.upper - 4 * b.lower};
}

ZetaEnclosure enclosure_pow(const ZetaEnclosure& e, unsigned n) {
  if (e.lower < 0) throw std::domain_error("enclosure_pow: bracket must be positive");
  return {rational_pow(e.lower, n), rational_pow(e.upper, n)};
}

}  // namespace hermeis::arith
