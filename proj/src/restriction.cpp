#include "hermeis/restriction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hermeis/bernoulli.hpp"
#include "hermeis/intmath.hpp"

namespace hermeis::restriction {

SiegelFourierTable restrict_to_siegel(const HermitianFourierTable& table) {
  std::map<HalfIntMatrix, Rational, siegel::HalfIntMatrixLess> acc;
  for (const auto& [t, v] : table.entries()) acc[{t.n, t.q, t.m}] += v;
  std::vector<SiegelFourierTable::Entry> entries(acc.begin(), acc.end());
  return SiegelFourierTable(table.weight(), table.trace_bound(), std::move(entries));
}

Rational restriction_coefficient(unsigned k, const field::Field& f, const HalfIntMatrix& r) {
  if (!siegel::is_positive_semidefinite(r))
    throw std::domain_error("restriction_coefficient: index not positive semidefinite");
  Int d = f.delta_value();
  Int cap = f.abs_delta() * r.a * r.c;
  Int q = r.b;
  Int disc = d * q * q + 4 * cap;
  Rational sum = 0;
  if (disc >= 0) {
    Int s = isqrt(disc);
    Int plo = floor_div(-d * q - s + 1, 2);
    Int phi = floor_div(-d * q + s, 2);
    for (Int p = plo; p <= phi; ++p) {
      field::HermitianIndex t{r.a, r.c, p, q};
      if (field::norm(f, t.v()) > cap) continue;
      sum += hermitian::eisenstein_coefficient(k, f, t);
    }
  }
  return sum;
}

Rational beta_identity_closed_form(unsigned k, const arith::Discriminant& delta) {
  Int abs_d = -delta.value();
  hermitian::AlphaStarCache cache(k, delta);
  cache.ensure(abs_d);
  Rational sum = cache.at(abs_d);
  for (Int j = 1; j * j <= abs_d; ++j) sum += 2 * cache.at(abs_d - j * j);
  return sum;
}

SiegelFourierTable g_form(unsigned k, const field::Field& f, Int trace_bound) {
  SiegelFourierTable restricted =
      restrict_to_siegel(hermitian::eisenstein_table(k, f, trace_bound));
  SiegelFourierTable sk = siegel::siegel_table(k, trace_bound);
  std::pair<Rational, const SiegelFourierTable*> terms[] = {
      {Rational(1), &restricted}, {Rational(-1), &sk}};
  return siegel::linear_combination(terms);
}

Rational weight8_identity_defect(const arith::Discriminant& delta) {
  Int abs_d = -delta.value();
  Rational a4 = hermitian::alpha_star(4, delta, abs_d);
  Rational a40 = hermitian::alpha_star(4, delta, 0);
  Rational a8 = hermitian::alpha_star(8, delta, abs_d);
  return 2 * a4 + 2 * a40 * a40 - a8;
}

Weight8IdentityResult weight8_identity_check(const field::Field& f, Int trace_bound) {
  HermitianFourierTable e4 = hermitian::eisenstein_table(4, f, trace_bound);
  HermitianFourierTable e8 = hermitian::eisenstein_table(8, f, trace_bound);
  HermitianFourierTable e4sq = hermitian::multiply(e4, e4);
  std::pair<Rational, const HermitianFourierTable*> terms[] = {{Rational(1), &e4sq},
                                                               {Rational(-1), &e8}};
  HermitianFourierTable diff = hermitian::linear_combination(terms);

  Weight8IdentityResult result;
  result.tables_equal = diff.is_zero();
  if (!result.tables_equal) {
    result.witness = diff.entries().front().first;
    result.witness_difference = diff.entries().front().second;
  }
  result.restriction_vanishes = restrict_to_siegel(diff).is_zero();
  return result;
}

CuspFormPair cusp_form_pair(unsigned k, const field::Field& f, Int trace_bound) {
  if (k == 10) {
    HermitianFourierTable e10 = hermitian::eisenstein_table(10, f, trace_bound);
    HermitianFourierTable e4e6 = hermitian::multiply(
        hermitian::eisenstein_table(4, f, trace_bound),
        hermitian::eisenstein_table(6, f, trace_bound));
    std::pair<Rational, const HermitianFourierTable*> terms[] = {{Rational(1), &e10},
                                                                 {Rational(-1), &e4e6}};
    HermitianFourierTable form = hermitian::linear_combination(terms);
    SiegelFourierTable restricted = restrict_to_siegel(form);
    return {std::move(form), std::move(restricted)};
  }
  if (k == 12) {
    HermitianFourierTable e12 = hermitian::eisenstein_table(12, f, trace_bound);
    HermitianFourierTable e4 = hermitian::eisenstein_table(4, f, trace_bound);
    HermitianFourierTable e6 = hermitian::eisenstein_table(6, f, trace_bound);
    HermitianFourierTable e4cube = hermitian::multiply(hermitian::multiply(e4, e4), e4);
    HermitianFourierTable e6sq = hermitian::multiply(e6, e6);
    std::pair<Rational, const HermitianFourierTable*> terms[] = {
        {Rational(1), &e12},
        {make_rational(-441, 691), &e4cube},
        {make_rational(-250, 691), &e6sq}};
    HermitianFourierTable form = hermitian::linear_combination(terms);
    SiegelFourierTable restricted = restrict_to_siegel(form);
    return {std::move(form), std::move(restricted)};
  }
  throw std::invalid_argument("cusp_form_pair: weight must be 10 or 12");
}

const char* to_string(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::nonzero_identity: return "nonzero";
    case ScanVerdict::nonzero_alternate: return "nonzero-alternate";
    case ScanVerdict::nonzero_table: return "nonzero-table";
    case ScanVerdict::zero: return "zero";
  }
  return "?";
}

std::size_t ScanReport::nonzero_count() const {
  std::size_t n = 0;
  for (const ScanRow& r : rows)
    if (r.verdict != ScanVerdict::zero) ++n;
  return n;
}

std::size_t ScanReport::zero_count() const { return rows.size() - nonzero_count(); }

namespace {

ScanRow scan_one(unsigned k, Int delta_value, const Rational& gamma_i) {
  arith::Discriminant delta(delta_value);
  ScanRow row;
  row.delta = delta_value;
  Rational w = beta_identity_closed_form(k, delta) - gamma_i;
  if (w != 0) {
    row.witness = {1, 0, 1};
    row.value = std::move(w);
    row.verdict = ScanVerdict::nonzero_identity;
    return row;
  }
  field::Field f(delta_value);
  if (delta_value == -4) {
    HalfIntMatrix r{1, 1, 1};
    Rational wr = restriction_coefficient(k, f, r) - siegel::siegel_coefficient(k, r);
    if (wr != 0) {
      row.witness = r;
      row.value = std::move(wr);
      row.verdict = ScanVerdict::nonzero_alternate;
      return row;
    }
  }
  // Last resort before a zero verdict: scan the whole table.
  SiegelFourierTable g = g_form(k, f, 4);
  if (!g.is_zero()) {
    row.witness = g.entries().front().first;
    row.value = g.entries().front().second;
    row.verdict = ScanVerdict::nonzero_table;
    return row;
  }
  row.witness = {1, 0, 1};
  row.value = Rational(0);
  row.verdict = ScanVerdict::zero;
  return row;
}

}  // namespace

ScanReport nonvanishing_scan(unsigned k, Int min_abs_delta, Int max_abs_delta) {
  if (k < 10 || k % 2 != 0)
    throw std::invalid_argument("nonvanishing_scan: weight must be even, >= 10");
  ScanReport report;
  report.weight = k;
  report.min_abs_delta = min_abs_delta;
  report.max_abs_delta = max_abs_delta;
  std::vector<Int> deltas = arith::negative_fundamental_discriminants(min_abs_delta, max_abs_delta);
  report.rows.resize(deltas.size());
  Rational gamma_i = siegel::gamma_identity_closed_form(k);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < deltas.size(); ++i)
    report.rows[i] = scan_one(k, deltas[i], gamma_i);
  return report;
}

int matrix_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  std::size_t ncols = rows.front().size();
  // Clear denominators row by row, then run fraction-free (Bareiss)
  // elimination on the integer matrix.
  std::vector<std::vector<mpz_class>> m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ncols) throw std::invalid_argument("matrix_rank: ragged matrix");
    mpz_class lcm = 1;
    for (const Rational& x : rows[i])
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    m[i].reserve(ncols);
    for (const Rational& x : rows[i]) m[i].push_back(x.get_num() * (lcm / x.get_den()));
  }
  std::size_t rank = 0;
  mpz_class prev_pivot = 1;
  for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j) {
        mpz_class num = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev_pivot = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

int rank_over_rationals(std::span<const HermitianFourierTable* const> tables, Int trace_bound) {
  if (tables.empty()) return 0;
  const field::Field& f = tables.front()->field();
  for (const HermitianFourierTable* t : tables)
    if (!(t->field() == f)) throw std::invalid_argument("rank_over_rationals: mixed fields");
  std::vector<field::HermitianIndex> cols = field::enumerate_psd(f, trace_bound);
  std::vector<std::vector<Rational>> rows;
  rows.reserve(tables.size());
  for (const HermitianFourierTable* t : tables) {
    std::vector<Rational> row;
    row.reserve(cols.size());
    for (const field::HermitianIndex& idx : cols) row.push_back(t->coefficient(idx));
    rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(rows));
}

std::vector<CohenAlphaRow> cohen_alpha_compare(unsigned k, const field::Field& f,
                                               std::span<const Int> ns) {
  std::vector<CohenAlphaRow> out;
  out.reserve(ns.size());
  Rational lead = make_rational(-2 * static_cast<Int>(k), 1) / arith::bernoulli(k);
  Rational znorm = -arith::bernoulli(2 * k - 2) / rational_of(2 * static_cast<Int>(k) - 2);
  hermitian::AlphaStarCache cache(k, f.delta());
  for (Int n : ns) {
    if (n < 1 || (n % 4 != 0 && n % 4 != 3))
      throw std::invalid_argument("cohen_alpha_compare: N must be 0 or 3 mod 4");
    CohenAlphaRow row;
    row.n = n;
    row.lhs = lead * siegel::cohen_h(k - 1, n) / znorm;
    Int abs_d = f.abs_delta();
    Int jmax = isqrt(abs_d * n);
    Int parity = mod_norm(f.delta_value() * n, 2);
    cache.ensure(abs_d * n / 4);
    Rational rhs = 0;
    for (Int j = -jmax; j <= jmax; ++j) {
      if (mod_norm(j, 2) != parity) continue;
      Int num = abs_d * n - j * j;
      if (num % 4 != 0)
        throw std::logic_error("cohen_alpha_compare: non-integral summand index");
      rhs += cache.at(num / 4);
    }
    row.rhs = std::move(rhs);
    row.equal = row.lhs == row.rhs;
    row.ratio = row.lhs == 0 ? 0.0 : to_double(row.rhs / row.lhs);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace hermeis::restriction
