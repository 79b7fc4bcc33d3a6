#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hermeis {

using Int = long long;

// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
// denominator) as long as they are produced by arithmetic or the helpers
// below; raw string/pair construction must go through make_rational /
// rational_from_string.
using Rational = mpq_class;

inline Rational make_rational(mpz_class num, mpz_class den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

inline Rational make_rational(Int num, Int den = 1) {
  return make_rational(mpz_class(static_cast<long>(num)),
                       mpz_class(static_cast<long>(den)));
}

inline Rational rational_of(Int n) { return Rational(static_cast<long>(n)); }

// Canonical textual form "num/den", den > 0, including "240/1".
std::string to_fraction_string(const Rational& x);

// Accepts "num/den" or a bare integer "num".
Rational rational_from_string(const std::string& s);

mpz_class int_pow(const mpz_class& base, unsigned long exp);

// base^exp for possibly negative exp (base != 0 in that case).
Rational rational_pow(const Rational& base, long exp);

mpz_class binomial(unsigned long n, unsigned long k);

inline double to_double(const Rational& x) { return mpq_get_d(x.get_mpq_t()); }

}  // namespace hermeis
