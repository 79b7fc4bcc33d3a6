#pragma once

#include <vector>

#include "hermeis/discriminant.hpp"
#include "hermeis/rational.hpp"

namespace hermeis::arith {

// Bernoulli number B_n with B_1 = -1/2. Cached; safe to call concurrently.
Rational bernoulli(unsigned n);

// B_0, ..., B_n as one snapshot; takes the cache lock once, so hot loops can
// stay off the mutex.
std::vector<Rational> bernoulli_through(unsigned n);

// B_n(x) = sum_i C(n,i) B_i x^(n-i).
Rational bernoulli_polynomial(unsigned n, const Rational& x);

// Generalized Bernoulli number B_{n,chi_d} via the character sum
// |d|^(n-1) * sum_{a=1}^{|d|} chi_d(a) B_n(a/|d|). For d = 1 this returns the
// ordinary B_n (trivial-character convention).
Rational generalized_bernoulli(unsigned n, const Discriminant& d);

}  // namespace hermeis::arith
