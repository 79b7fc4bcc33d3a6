#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hermeis/hermitian.hpp"
#include "hermeis/rational.hpp"
#include "hermeis/siegel.hpp"

namespace hermeis::shimura {

// Finite exact coefficient sequence a(1), ..., a(M). weight_tag carries the
// integer k of a half-integral weight k - 1/2 (or the lifted integral
// weight). Lengths are explicit everywhere; nothing is zero-padded.
struct CoefficientSequence {
  unsigned weight_tag = 0;
  std::vector<Rational> values;  // values[i] = a(i+1)

  Int length() const { return static_cast<Int>(values.size()); }
  const Rational& at(Int n) const;  // 1-based
};

// Kohnen plus condition: a(n) = 0 for all stored n = 1, 2 mod 4.
bool plus_space_check(const CoefficientSequence& seq);

// Index-1 Jacobi slice (n, r) -> value, reindexed by the discriminant
// N = 4n - r^2. Coefficients of a genuine index-1 Jacobi form depend on
// (n, r) only through N, so c(N) is read off the lowest representative
// (n0, r0) with r0 = N mod 2; representatives of one N agreeing is a
// property of the input that tests assert separately. N = 0 is dropped.
using Index1Slice = std::map<std::pair<Int, Int>, Rational>;
CoefficientSequence jacobi_to_plus_form(const Index1Slice& slice, unsigned weight_tag);

// Representative disagreement diagnostic for jacobi_to_plus_form inputs:
// number of (n, r) entries whose value differs from their N-representative.
std::size_t index1_slice_mismatches(const Index1Slice& slice);

// The index-1 slice of a Siegel table: entries (a, b, 1) keyed by (a, b).
Index1Slice siegel_index1_slice(const siegel::SiegelFourierTable& table);

// The index-1 slice of a Hermitian table restricted to the diagonal of the
// Jacobi variables: entries with m = 1 aggregated over v with fixed trace,
// keyed by (n, r = q).
Index1Slice hermitian_index1_slice(const hermitian::HermitianFourierTable& table);

// Character discriminant of the lift: the discriminant of Q(sqrt((-1)^(k-1) t)).
// The twisting convention is isolated here.
Int shimura_character_discriminant(unsigned k, Int t);

// b_t(n) = sum_{d|n} chi*(d) d^(k-2) a(t n^2 / d^2) for n <= m_out. The input
// must reach index t*m_out^2; shorter input is an error, never padded.
CoefficientSequence shimura_lift(const CoefficientSequence& a, Int t, unsigned k, Int m_out);

// Exact partial sum sum_{n <= M} c(|delta| n^2) n^(3-2k); the full series
// vanishing characterizes a trivial lift. Input must reach |delta| M^2.
Rational lift_obstruction_partial_sum(const CoefficientSequence& c, Int abs_delta,
                                      unsigned k, Int m);

}  // namespace hermeis::shimura
