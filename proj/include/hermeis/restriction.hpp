#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hermeis/hermitian.hpp"
#include "hermeis/siegel.hpp"

namespace hermeis::restriction {

using hermitian::HermitianFourierTable;
using siegel::HalfIntMatrix;
using siegel::SiegelFourierTable;

// Restriction to the Siegel half-space at the coefficient level:
// beta(R) = sum of alpha(T) over T with n = a, m = c, trace(t) = q = b.
SiegelFourierTable restrict_to_siegel(const HermitianFourierTable& table);

// Single restricted coefficient of E_k at R, by direct enumeration of the
// contributing indices (a p-scan along the ellipse N(v) <= |delta| a c).
Rational restriction_coefficient(unsigned k, const field::Field& f, const HalfIntMatrix& r);

// beta_k(I) = alpha*_k(|delta|) + 2 sum_{1 <= j <= sqrt(|delta|)}
// alpha*_k(|delta| - j^2); agrees with restrict_to_siegel at R = I.
Rational beta_identity_closed_form(unsigned k, const arith::Discriminant& delta);

// G_k = (E_k restricted) - S_k as a Siegel table.
SiegelFourierTable g_form(unsigned k, const field::Field& f, Int trace_bound);

// Coefficient of I in E_4^2 - E_8: 2 alpha*_4(|delta|) + 2 alpha*_4(0)^2 -
// alpha*_8(|delta|). Zero exactly at delta = -3.
Rational weight8_identity_defect(const arith::Discriminant& delta);

// Full-table comparison of E_4^2 with E_8, plus the restriction of the
// difference (which vanishes for every field).
struct Weight8IdentityResult {
  bool tables_equal = false;
  std::optional<field::HermitianIndex> witness;  // first differing index
  Rational witness_difference;
  bool restriction_vanishes = false;
};
Weight8IdentityResult weight8_identity_check(const field::Field& f, Int trace_bound);

// The cusp forms of weight 10 and 12: E_10 - E_4 E_6 and
// E_12 - (441/691) E_4^3 - (250/691) E_6^2, with their restrictions.
struct CuspFormPair {
  HermitianFourierTable form;
  SiegelFourierTable restricted;
};
CuspFormPair cusp_form_pair(unsigned k, const field::Field& f, Int trace_bound);

enum class ScanVerdict { nonzero_identity, nonzero_alternate, nonzero_table, zero };
const char* to_string(ScanVerdict v);

struct ScanRow {
  Int delta = 0;
  HalfIntMatrix witness;
  Rational value;
  ScanVerdict verdict = ScanVerdict::zero;
};

struct ScanReport {
  unsigned weight = 0;
  Int min_abs_delta = 0;
  Int max_abs_delta = 0;
  std::vector<ScanRow> rows;  // increasing |delta|

  std::size_t nonzero_count() const;
  std::size_t zero_count() const;
};

// Nonvanishing of G_k per field: the witness is beta_k(I) - gamma_k(I) via
// closed forms; a zero there falls back to R = [[1,1/2],[1/2,1]] for
// delta = -4 and then to a full table scan at trace bound 4.
ScanReport nonvanishing_scan(unsigned k, Int min_abs_delta, Int max_abs_delta);

// Rank of the exact coefficient matrix (rows = tables, columns = all indices
// within the bound), by fraction-free elimination.
int rank_over_rationals(std::span<const HermitianFourierTable* const> tables, Int trace_bound);

// Core elimination on a dense rational matrix; exposed for direct use.
int matrix_rank(std::vector<std::vector<Rational>> rows);

// Both sides of the Cohen/alpha* comparison at one index N:
//   lhs = (-2k/B_k) H(k-1, N) / zeta(3-2k)
//   rhs = sum over |j| <= sqrt(|delta| N), j = delta*N mod 2, of
//         alpha*_k((|delta| N - j^2)/4)
// Equality holds for k = 4, 6, 8; for larger weights the ratio is the
// interesting diagnostic.
struct CohenAlphaRow {
  Int n = 0;
  Rational lhs;
  Rational rhs;
  bool equal = false;
  double ratio = 0.0;  // rhs/lhs when lhs != 0
};
std::vector<CohenAlphaRow> cohen_alpha_compare(unsigned k, const field::Field& f,
                                               std::span<const Int> ns);

}  // namespace hermeis::restriction
