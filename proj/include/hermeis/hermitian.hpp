#pragma once

#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "hermeis/field.hpp"

namespace hermeis::hermitian {

using field::Field;
using field::HermitianIndex;

// a_delta(ell) = prod_j (1 + chi_j(-ell)) over the prime-discriminant
// factorization of delta; the number of dual residues u with
// delta*u*conj(u) = ell mod delta.
Int a_delta(const arith::Discriminant& delta, Int ell);

// The three equivalent forms of the unit coefficient eps_{t,ell}. All
// require t | ell, ell >= 1 and a_delta(ell) > 0; the divided form is
// undefined otherwise and the arguments are rejected.
//
// Averaged form: (1/a_delta(ell)) * sum over factorizations d1*d2 = delta of
// chi_{d1}(t) * chi_{d2}(-ell/t).
Rational epsilon_sum(const arith::Discriminant& delta, Int t, Int ell);
// Factored form: product over prime discriminants, chi_j(t) when
// gcd(t, delta_j) = 1 and chi_j(-ell/t) otherwise.
int epsilon_product(const arith::Discriminant& delta, Int t, Int ell);
// Split form: chi_{d'}(t) * chi_{d}(-ell/t) where d collects the prime
// discriminants whose prime divides t and d' = delta/d.
int epsilon_split(const arith::Discriminant& delta, Int t, Int ell);

// r_{k,delta} = -4k(k-1)/(B_k * B_{k-1,chi_delta}) > 0.
Rational r_const(unsigned k, const arith::Discriminant& delta);

// alpha*_k(ell): -2k/B_k at ell = 0; zero when a_delta(ell) = 0; otherwise
// r_{k,delta} * sum_{t|ell} eps_{t,ell} (ell/t)^(k-2).
Rational alpha_star(unsigned k, const arith::Discriminant& delta, Int ell);

// The divisor sum r_{k,delta} * sum_{t|ell} eps_{t,ell} (ell/t)^(k-2) with
// eps taken in the split form, which stays defined when a_delta(ell) = 0.
// Agrees with alpha_star wherever a_delta(ell) > 0 and is its multiplicative
// extension elsewhere: the twisted-multiplicativity identity
// alpha*(l1) alpha*(l2) = r * alpha*(l1 l2) lands on a_delta(l1 l2) = 0
// whenever its hypotheses hold, so its right side is this value.
Rational alpha_star_extended(unsigned k, const arith::Discriminant& delta, Int ell);

// Dense memo of alpha*_k over 0..max_ell for one (k, delta). Warm it up
// sequentially, then reads are safe from any number of threads.
class AlphaStarCache {
 public:
  AlphaStarCache(unsigned k, arith::Discriminant delta);

  void ensure(Int max_ell);
  const Rational& at(Int ell) const;

  unsigned weight() const { return k_; }
  const arith::Discriminant& delta() const { return delta_; }
  const Rational& r() const { return r_; }
  const Rational& alpha0() const { return alpha0_; }

 private:
  unsigned k_;
  arith::Discriminant delta_;
  Rational r_;
  Rational alpha0_;
  std::vector<Rational> values_;
};

// Full coefficient of E_k at T: 1 at T = 0, otherwise the lift
// sum_{d | eps(T)} d^(k-1) alpha*_k(scaled_det(T)/d^2). Indefinite T rejected.
Rational eisenstein_coefficient(unsigned k, const Field& f, const HermitianIndex& t);

// Truncated Fourier expansion: canonical, immutable, zero entries dropped.
class HermitianFourierTable {
 public:
  using Entry = std::pair<HermitianIndex, Rational>;

  // entries need not be sorted; they are canonicalized and zeros removed.
  HermitianFourierTable(Field f, unsigned weight, Int trace_bound,
                        std::vector<Entry> entries);

  static HermitianFourierTable unit(Field f, Int trace_bound);
  static HermitianFourierTable zero(Field f, unsigned weight, Int trace_bound);

  const Field& field() const { return field_; }
  unsigned weight() const { return weight_; }
  Int trace_bound() const { return trace_bound_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  // nullptr means a coefficient of exact zero (inside the trace bound).
  const Rational* find(const HermitianIndex& t) const;
  Rational coefficient(const HermitianIndex& t) const;

  friend bool operator==(const HermitianFourierTable& a, const HermitianFourierTable& b) {
    return a.field_ == b.field_ && a.weight_ == b.weight_ &&
           a.trace_bound_ == b.trace_bound_ && a.entries_ == b.entries_;
  }

 private:
  Field field_;
  unsigned weight_;
  Int trace_bound_;
  std::vector<Entry> entries_;
};

// Fourier table of E_k up to the trace bound. The parallel builder fills
// output slots with OpenMP; the serial builder is an independent reference
// that evaluates every coefficient directly.
HermitianFourierTable eisenstein_table(unsigned k, const Field& f, Int trace_bound);
HermitianFourierTable eisenstein_table_serial(unsigned k, const Field& f, Int trace_bound);

// Convolution (AB)(T) = sum over T1 + T2 = T, both >= 0. Result bound is the
// smaller of the two bounds; mixed fields are rejected. The parallel kernel
// partitions output indices; the serial reference accumulates entry pairs.
HermitianFourierTable multiply(const HermitianFourierTable& a, const HermitianFourierTable& b);
HermitianFourierTable multiply_serial(const HermitianFourierTable& a,
                                      const HermitianFourierTable& b);

// Pointwise sum_i c_i * A_i, truncated to the smallest bound involved.
// Weight is taken from the first table; callers combine like weights.
HermitianFourierTable linear_combination(
    std::span<const std::pair<Rational, const HermitianFourierTable*>> terms);

// Entries with lower-right diagonal m, reindexed by (n, p, q).
using JacobiSlice = std::map<std::tuple<Int, Int, Int>, Rational>;
JacobiSlice fourier_jacobi_slice(const HermitianFourierTable& table, Int m);

// Value at Z = iyI plus a tail estimate: largest stored |coefficient| times
// sum_{t > bound} 4(t+1)(|delta| t^2 + 1) e^(-2 pi y t), the bracket counting
// lattice points of trace t.
struct TruncatedValue {
  double value = 0.0;
  double tail_bound = 0.0;
};
TruncatedValue evaluate_truncated(const HermitianFourierTable& table, double y);

}  // namespace hermeis::hermitian
