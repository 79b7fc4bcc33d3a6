#pragma once

#include "hermeis/rational.hpp"

namespace hermeis::arith {

// Kronecker symbol (d|n), i.e. the character chi_d(n). Accepts any d with
// d = 0,1 mod 4 (this includes d = 1, the trivial character); other d are
// rejected. Defined for every integer n, with chi_d(n) = 0 iff gcd(n, d) > 1.
int kronecker(Int d, Int n);

}  // namespace hermeis::arith
