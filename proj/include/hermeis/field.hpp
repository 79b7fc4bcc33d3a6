#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "hermeis/discriminant.hpp"
#include "hermeis/rational.hpp"

namespace hermeis::field {

// Imaginary-quadratic field of fundamental discriminant delta < 0, with
// integer basis 1, omega where omega = (delta + sqrt(delta))/2.
class Field {
 public:
  explicit Field(Int delta);
  explicit Field(arith::Discriminant delta);

  const arith::Discriminant& delta() const { return delta_; }
  Int delta_value() const { return delta_.value(); }
  Int abs_delta() const { return -delta_.value(); }
  Int trace_omega() const { return delta_.value(); }
  Int norm_omega() const {
    Int d = delta_.value();
    return (d * d - d) / 4;
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.delta_ == b.delta_;
  }

 private:
  arith::Discriminant delta_;
};

// v = p + q*omega in the ring of integers.
struct IntegerElement {
  Int p = 0;
  Int q = 0;
  friend bool operator==(const IntegerElement&, const IntegerElement&) = default;
};

// N(p + q*omega) = p^2 + delta*p*q + q^2*(delta^2 - delta)/4 >= 0.
Int norm(const Field& f, const IntegerElement& v);

// Index T = [[n, t],[conj(t), m]] with t = v/sqrt(delta) in the inverse
// different; all coordinates integral. trace(t) = q.
struct HermitianIndex {
  Int n = 0;
  Int m = 0;
  Int p = 0;
  Int q = 0;

  IntegerElement v() const { return {p, q}; }
  Int trace() const { return n + m; }
  bool is_zero() const { return n == 0 && m == 0 && p == 0 && q == 0; }
  friend bool operator==(const HermitianIndex&, const HermitianIndex&) = default;
};

// |delta| * det(T) = |delta|*n*m - N(v); integral for every T in the lattice.
Int scaled_det(const Field& f, const HermitianIndex& t);

// T >= 0. n >= 0, m >= 0 and scaled_det >= 0 suffice: if n = m = 0 the
// determinant condition forces v = 0.
bool is_positive_semidefinite(const Field& f, const HermitianIndex& t);

// content eps(T) = gcd(n, m, p, q); largest ell with T/ell still integral.
Int content(const HermitianIndex& t);

// Lexicographic on (n + m, n, p, q); the canonical table order.
struct HermitianIndexLess {
  bool operator()(const HermitianIndex& a, const HermitianIndex& b) const {
    return std::tuple(a.n + a.m, a.n, a.p, a.q) < std::tuple(b.n + b.m, b.n, b.p, b.q);
  }
};

// All T >= 0 with n + m <= trace_bound, each exactly once, in canonical
// order. Includes T = 0.
std::vector<HermitianIndex> enumerate_psd(const Field& f, Int trace_bound);

// Residues v of the ring of integers mod sqrt(delta) (|delta| cosets) with
// N(v) = -ell mod |delta|. This counts the u in the inverse different mod
// integers with delta*u*conj(u) = ell mod delta: for u = v/sqrt(delta) one
// has delta*u*conj(u) = -N(v), so the congruence reads N(v) = -ell mod |delta|.
Int a_delta_bruteforce(const Field& f, Int ell);

// "n,m,p,q"
std::string to_string(const HermitianIndex& t);
HermitianIndex hermitian_index_from_string(const std::string& s);

}  // namespace hermeis::field
