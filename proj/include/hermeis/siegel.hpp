#pragma once

#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "hermeis/rational.hpp"

namespace hermeis::siegel {

// Half-integral index R = [[a, b/2],[b/2, c]].
struct HalfIntMatrix {
  Int a = 0;
  Int b = 0;
  Int c = 0;

  Int trace() const { return a + c; }
  Int det4() const { return 4 * a * c - b * b; }  // 4 det(R)
  bool is_zero() const { return a == 0 && b == 0 && c == 0; }
  friend bool operator==(const HalfIntMatrix&, const HalfIntMatrix&) = default;
};

inline bool is_positive_semidefinite(const HalfIntMatrix& r) {
  return r.a >= 0 && r.c >= 0 && r.det4() >= 0;
}

Int content(const HalfIntMatrix& r);  // gcd(a, b, c); zero index rejected

// Lexicographic on (a + c, a, b); the canonical table order.
struct HalfIntMatrixLess {
  bool operator()(const HalfIntMatrix& x, const HalfIntMatrix& y) const {
    return std::tuple(x.a + x.c, x.a, x.b) < std::tuple(y.a + y.c, y.a, y.b);
  }
};

// All R >= 0 with a + c <= trace_bound, canonical order, including R = 0.
std::vector<HalfIntMatrix> enumerate_psd(Int trace_bound);

// Cohen's function H(r, N) for r >= 2, N >= 0:
//   H(r, 0) = zeta(1-2r) = -B_{2r}/(2r),
//   H(r, N) = 0 for N = 1, 2 mod 4,
//   otherwise (-1)^r N = D f^2 with D fundamental and
//   H(r, N) = L(1-r, chi_D) sum_{d|f} mu(d) chi_D(d) d^(r-1) sigma_{2r-1}(f/d),
//   with L(1-r, chi_D) = -B_{r,chi_D}/r. The split needs (-1)^r N = 0,1 mod 4;
//   when it fails (even r, N = 3 mod 4) the value is 0.
Rational cohen_h(unsigned r, Int n);

// Coefficient gamma_k(R) of the Siegel Eisenstein series: 1 at R = 0, else
// (-2k/B_k) sum_{d | content(R)} d^(k-1) H(k-1, det4(R)/d^2) / zeta(3-2k).
Rational siegel_coefficient(unsigned k, const HalfIntMatrix& r);

// gamma_k(I) = -4k B_{k-1,chi_{-4}} / (B_k B_{2k-2}); the second route to the
// same value, kept independent of cohen_h.
Rational gamma_identity_closed_form(unsigned k);

class SiegelFourierTable {
 public:
  using Entry = std::pair<HalfIntMatrix, Rational>;

  SiegelFourierTable(unsigned weight, Int trace_bound, std::vector<Entry> entries);

  static SiegelFourierTable zero(unsigned weight, Int trace_bound);

  unsigned weight() const { return weight_; }
  Int trace_bound() const { return trace_bound_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  const Rational* find(const HalfIntMatrix& r) const;
  Rational coefficient(const HalfIntMatrix& r) const;

  friend bool operator==(const SiegelFourierTable& a, const SiegelFourierTable& b) {
    return a.weight_ == b.weight_ && a.trace_bound_ == b.trace_bound_ &&
           a.entries_ == b.entries_;
  }

 private:
  unsigned weight_;
  Int trace_bound_;
  std::vector<Entry> entries_;
};

SiegelFourierTable siegel_table(unsigned k, Int trace_bound);
SiegelFourierTable siegel_table_serial(unsigned k, Int trace_bound);

SiegelFourierTable multiply(const SiegelFourierTable& a, const SiegelFourierTable& b);
SiegelFourierTable multiply_serial(const SiegelFourierTable& a, const SiegelFourierTable& b);

SiegelFourierTable linear_combination(
    std::span<const std::pair<Rational, const SiegelFourierTable*>> terms);

// Maass relation A(a,b,c) = sum_{d | gcd(a,b,c)} d^(k-1) A(ac/d^2, b/d, 1),
// checked for every index inside the bound whose reference indices all stay
// inside the bound; the rest are counted as skipped.
struct MaassCheckResult {
  bool passed = true;
  std::size_t verified = 0;
  std::size_t skipped = 0;
  std::optional<HalfIntMatrix> witness;
};
MaassCheckResult maass_condition_check(const SiegelFourierTable& table);

// Value at Z = iyI plus a tail estimate; the bracket (t+1)(t+2) dominates
// the number of indices of trace t.
struct TruncatedValue {
  double value = 0.0;
  double tail_bound = 0.0;
};
TruncatedValue evaluate_truncated(const SiegelFourierTable& table, double y);

std::string to_string(const HalfIntMatrix& r);  // "a,b,c"
HalfIntMatrix half_int_matrix_from_string(const std::string& s);

}  // namespace hermeis::siegel
