#include "hermeis/shimura.hpp"

#include <stdexcept>

#include "hermeis/characters.hpp"
#include "hermeis/intmath.hpp"

namespace hermeis::shimura {

const Rational& CoefficientSequence::at(Int n) const {
  if (n < 1 || n > length())
    throw std::out_of_range("CoefficientSequence: index outside stored range");
  return values[static_cast<std::size_t>(n - 1)];
}

bool plus_space_check(const CoefficientSequence& seq) {
  for (Int n = 1; n <= seq.length(); ++n) {
    Int m4 = n % 4;
    if ((m4 == 1 || m4 == 2) && seq.at(n) != 0) return false;
  }
  return true;
}

CoefficientSequence jacobi_to_plus_form(const Index1Slice& slice, unsigned weight_tag) {
  Int max_n = 0;
  for (const auto& [key, value] : slice) max_n = std::max(max_n, key.first);
  CoefficientSequence out;
  out.weight_tag = weight_tag;
  out.values.assign(static_cast<std::size_t>(4 * max_n), Rational(0));
  for (Int n_index = 1; n_index <= 4 * max_n; ++n_index) {
    Int m4 = n_index % 4;
    if (m4 == 1 || m4 == 2) continue;  // plus space by construction
    Int r0 = n_index % 2;
    Int n0 = (n_index + r0 * r0) / 4;
    auto it = slice.find({n0, r0});
    if (it == slice.end() && r0 != 0) it = slice.find({n0, -r0});
    if (it != slice.end()) out.values[static_cast<std::size_t>(n_index - 1)] = it->second;
  }
  return out;
}

std::size_t index1_slice_mismatches(const Index1Slice& slice) {
  std::size_t mismatches = 0;
  for (const auto& [key, value] : slice) {
    auto [n, r] = key;
    Int disc = 4 * n - r * r;
    if (disc <= 0) continue;
    Int r0 = disc % 2;
    Int n0 = (disc + r0 * r0) / 4;
    auto it = slice.find({n0, r0});
    if (it == slice.end() && r0 != 0) it = slice.find({n0, -r0});
    Rational reference = it == slice.end() ? Rational(0) : it->second;
    if (reference != value) ++mismatches;
  }
  return mismatches;
}

Index1Slice siegel_index1_slice(const siegel::SiegelFourierTable& table) {
  Index1Slice slice;
  for (const auto& [r, v] : table.entries())
    if (r.c == 1) slice[{r.a, r.b}] = v;
  return slice;
}

Index1Slice hermitian_index1_slice(const hermitian::HermitianFourierTable& table) {
  Index1Slice slice;
  for (const auto& [t, v] : table.entries())
    if (t.m == 1) slice[{t.n, t.q}] += v;
  std::erase_if(slice, [](const auto& e) { return e.second == 0; });
  return slice;
}

Int shimura_character_discriminant(unsigned k, Int t) {
  if (t < 1 || !is_squarefree(t))
    throw std::invalid_argument("shimura lift: t must be squarefree and positive");
  Int m = (k % 2 == 0) ? -t : t;
  if (m == 1) return 1;
  return mod_norm(m, 4) == 1 ? m : 4 * m;
}

CoefficientSequence shimura_lift(const CoefficientSequence& a, Int t, unsigned k, Int m_out) {
  if (m_out < 0) throw std::invalid_argument("shimura lift: negative output length");
  Int need = t * m_out * m_out;
  if (a.length() < need)
    throw std::invalid_argument("shimura lift: input sequence too short (need index " +
                                std::to_string(need) + ", have " +
                                std::to_string(a.length()) + ")");
  Int chi_disc = shimura_character_discriminant(k, t);
  CoefficientSequence out;
  out.weight_tag = 2 * k - 2;
  out.values.reserve(static_cast<std::size_t>(m_out));
  for (Int n = 1; n <= m_out; ++n) {
    Rational b = 0;
    for (Int d : divisors(n)) {
      int chi = arith::kronecker(chi_disc, d);
      if (chi == 0) continue;
      Int e = n / d;
      Rational term = Rational(int_pow(mpz_class(static_cast<long>(d)), k - 2)) *
                      a.at(t * e * e);
      b += chi > 0 ? term : -term;
    }
    out.values.push_back(std::move(b));
  }
  return out;
}

Rational lift_obstruction_partial_sum(const CoefficientSequence& c, Int abs_delta,
                                      unsigned k, Int m) {
  if (abs_delta < 1) throw std::invalid_argument("partial sum: |delta| must be positive");
  if (c.length() < abs_delta * m * m)
    throw std::invalid_argument("partial sum: input sequence too short");
  Rational sum = 0;
  for (Int n = 1; n <= m; ++n) {
    mpz_class den = int_pow(mpz_class(static_cast<long>(n)), 2 * k - 3);
    sum += c.at(abs_delta * n * n) * make_rational(mpz_class(1), den);
  }
  return sum;
}

}  // namespace hermeis::shimura
