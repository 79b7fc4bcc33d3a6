#pragma once

#include "hermeis/rational.hpp"

namespace hermeis::arith {

// Exact rational bracket lower <= zeta(s) <= upper from a partial sum plus
// the integral tail bound terms^(1-s)/(s-1).
struct ZetaEnclosure {
  Rational lower;
  Rational upper;

  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
  Rational width() const { return upper - lower; }
};

ZetaEnclosure zeta_enclosure(unsigned s, unsigned terms);

// Same partial sum with the integral bound applied on both sides
// (terms+1)^(1-s)/(s-1) <= tail <= terms^(1-s)/(s-1), so the width shrinks
// like terms^-s instead of terms^(1-s).
ZetaEnclosure zeta_enclosure_sharp(unsigned s, unsigned terms);

// Bracket for pi^2 (= 6 zeta(2)); width shrinks like 6/terms.
ZetaEnclosure pi_squared_enclosure(unsigned terms);

// Certified rational bracket of pi itself, from the arctangent identity
// pi = 16 atan(1/5) - 4 atan(1/239) with alternating partial sums on both
// sides; width is far below 1e-40.
ZetaEnclosure pi_enclosure();

// Componentwise power of a bracket of a positive quantity.
ZetaEnclosure enclosure_pow(const ZetaEnclosure& e, unsigned n);

}  // namespace hermeis::arith
