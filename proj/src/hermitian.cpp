#include "hermeis/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hermeis/bernoulli.hpp"
#include "hermeis/intmath.hpp"

namespace hermeis::hermitian {

Int a_delta(const arith::Discriminant& delta, Int ell) {
  // Defined for any fundamental discriminant: the prime-discriminant factors
  // of a negative one can be positive, and the multiplicativity of eps in
  // the discriminant evaluates those factors on their own.
  if (ell < 0) throw std::invalid_argument("a_delta: ell must be >= 0");
  Int prod = 1;
  for (Int dj : delta.prime_factors()) prod *= 1 + arith::kronecker(dj, -ell);
  return prod;
}

namespace {

void check_epsilon_args(const arith::Discriminant& delta, Int t, Int ell) {
  if (ell < 1) throw std::domain_error("epsilon: ell must be >= 1");
  if (t < 1 || ell % t != 0) throw std::domain_error("epsilon: t must divide ell");
  if (a_delta(delta, ell) == 0)
    throw std::domain_error("epsilon: undefined when a_delta(ell) = 0");
}

}  // namespace

Rational epsilon_sum(const arith::Discriminant& delta, Int t, Int ell) {
  check_epsilon_args(delta, t, ell);
  Int sum = 0;
  for (auto& [d1, d2] : arith::fundamental_divisor_pairs(delta))
    sum += arith::kronecker(d1, t) * arith::kronecker(d2, -(ell / t));
  return make_rational(sum, a_delta(delta, ell));
}

int epsilon_product(const arith::Discriminant& delta, Int t, Int ell) {
  check_epsilon_args(delta, t, ell);
  int prod = 1;
  for (Int dj : delta.prime_factors()) {
    int factor = (gcd(t, dj) == 1) ? arith::kronecker(dj, t)
                                   : arith::kronecker(dj, -(ell / t));
    prod *= factor;
    if (prod == 0) break;
  }
  return prod;
}

int epsilon_split(const arith::Discriminant& delta, Int t, Int ell) {
  check_epsilon_args(delta, t, ell);
  // d_t collects the prime discriminants whose prime divides t, so that
  // |d_t| = gcd(t^inf, delta).
  Int dt = 1;
  for (Int dj : delta.prime_factors())
    if (gcd(t, dj) > 1) dt *= dj;
  Int dtp = delta.value() / dt;
  return arith::kronecker(dtp, t) * arith::kronecker(dt, -(ell / t));
}

Rational r_const(unsigned k, const arith::Discriminant& delta) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("r_const: weight must be even, >= 4");
  Rational denom = arith::bernoulli(k) * arith::generalized_bernoulli(k - 1, delta);
  return make_rational(-4 * static_cast<Int>(k) * (static_cast<Int>(k) - 1), 1) / denom;
}

namespace {

Rational alpha_star_zero(unsigned k) {
  return make_rational(-2 * static_cast<Int>(k), 1) / arith::bernoulli(k);
}

Rational alpha_star_positive(unsigned k, const arith::Discriminant& delta,
                             const Rational& r, Int ell) {
  Rational sum = 0;
  for (Int t : divisors(ell)) {
    int eps = epsilon_product(delta, t, ell);
    if (eps == 0) continue;
    mpz_class power = int_pow(mpz_class(static_cast<long>(ell / t)), k - 2);
    sum += eps > 0 ? Rational(power) : Rational(-power);
  }
  return r * sum;
}

}  // namespace

Rational alpha_star(unsigned k, const arith::Discriminant& delta, Int ell) {
  if (k < 4 || k % 2 != 0)
    throw std::invalid_argument("alpha_star: weight must be even, >= 4");
  if (ell < 0) throw std::invalid_argument("alpha_star: ell must be >= 0");
  if (ell == 0) return alpha_star_zero(k);
  if (a_delta(delta, ell) == 0) return Rational(0);
  return alpha_star_positive(k, delta, r_const(k, delta), ell);
}

Rational alpha_star_extended(unsigned k, const arith::Discriminant& delta, Int ell) {
  if (k < 4 || k % 2 != 0)
    throw std::invalid_argument("alpha_star_extended: weight must be even, >= 4");
  if (ell < 0) throw std::invalid_argument("alpha_star_extended: ell must be >= 0");
  if (ell == 0) return alpha_star_zero(k);
  Rational sum = 0;
  for (Int t : divisors(ell)) {
    // split form: no division by a_delta(ell)
    Int dt = 1;
    for (Int dj : delta.prime_factors())
      if (gcd(t, dj) > 1) dt *= dj;
    int eps = arith::kronecker(delta.value() / dt, t) * arith::kronecker(dt, -(ell / t));
    if (eps == 0) continue;
    mpz_class power = int_pow(mpz_class(static_cast<long>(ell / t)), k - 2);
    sum += eps > 0 ? Rational(power) : Rational(-power);
  }
  return r_const(k, delta) * sum;
}

AlphaStarCache::AlphaStarCache(unsigned k, arith::Discriminant delta)
    : k_(k), delta_(std::move(delta)), r_(r_const(k, delta_)), alpha0_(alpha_star_zero(k)) {
  values_.push_back(alpha0_);
}

void AlphaStarCache::ensure(Int max_ell) {
  Int first = static_cast<Int>(values_.size());
  if (max_ell < first) return;
  values_.resize(static_cast<std::size_t>(max_ell) + 1);
  // slots are independent; nested regions degrade to a single thread
#pragma omp parallel for schedule(dynamic, 8)
  for (Int ell = first; ell <= max_ell; ++ell) {
    if (a_delta(delta_, ell) != 0)
      values_[static_cast<std::size_t>(ell)] = alpha_star_positive(k_, delta_, r_, ell);
  }
}

const Rational& AlphaStarCache::at(Int ell) const {
  if (ell < 0 || ell >= static_cast<Int>(values_.size()))
    throw std::out_of_range("AlphaStarCache: ell not warmed up");
  return values_[static_cast<std::size_t>(ell)];
}

Rational eisenstein_coefficient(unsigned k, const Field& f, const HermitianIndex& t) {
  if (!field::is_positive_semidefinite(f, t))
    throw std::domain_error("eisenstein_coefficient: index not positive semidefinite");
  if (t.is_zero()) return Rational(1);
  Int sdet = field::scaled_det(f, t);
  Int eps = field::content(t);
  Rational sum = 0;
  for (Int d : divisors(eps)) {
    Rational a = alpha_star(k, f.delta(), sdet / (d * d));
    if (a == 0) continue;
    sum += Rational(int_pow(mpz_class(static_cast<long>(d)), k - 1)) * a;
  }
  return sum;
}

HermitianFourierTable::HermitianFourierTable(Field f, unsigned weight, Int trace_bound,
                                             std::vector<Entry> entries)
    : field_(std::move(f)), weight_(weight), trace_bound_(trace_bound),
      entries_(std::move(entries)) {
  std::erase_if(entries_, [](const Entry& e) { return e.second == 0; });
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    return field::HermitianIndexLess{}(a.first, b.first);
  });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].first.trace() > trace_bound_)
      throw std::invalid_argument("HermitianFourierTable: entry beyond trace bound");
    if (i > 0 && entries_[i].first == entries_[i - 1].first)
      throw std::invalid_argument("HermitianFourierTable: duplicate index");
  }
}

HermitianFourierTable HermitianFourierTable::unit(Field f, Int trace_bound) {
  return HermitianFourierTable(std::move(f), 0, trace_bound, {{HermitianIndex{}, Rational(1)}});
}

HermitianFourierTable HermitianFourierTable::zero(Field f, unsigned weight, Int trace_bound) {
  return HermitianFourierTable(std::move(f), weight, trace_bound, {});
}

const Rational* HermitianFourierTable::find(const HermitianIndex& t) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), t,
                             [](const Entry& e, const HermitianIndex& key) {
                               return field::HermitianIndexLess{}(e.first, key);
                             });
  if (it != entries_.end() && it->first == t) return &it->second;
  return nullptr;
}

Rational HermitianFourierTable::coefficient(const HermitianIndex& t) const {
  const Rational* r = find(t);
  return r ? *r : Rational(0);
}

namespace {

Rational table_coefficient(const AlphaStarCache& cache, const Field& f,
                           const HermitianIndex& t) {
  unsigned k = cache.weight();
  if (t.is_zero()) return Rational(1);
  Int sdet = field::scaled_det(f, t);
  Int eps = field::content(t);
  if (sdet == 0)  // every divisor contributes alpha*(0)
    return cache.alpha0() * Rational(sigma_power(eps, k - 1));
  Rational sum = 0;
  for (Int d : divisors(eps)) {
    const Rational& a = cache.at(sdet / (d * d));
    if (a == 0) continue;
    sum += Rational(int_pow(mpz_class(static_cast<long>(d)), k - 1)) * a;
  }
  return sum;
}

Int max_scaled_det(const Field& f, Int trace_bound) {
  Int half = trace_bound / 2;
  return f.abs_delta() * half * (trace_bound - half);
}

}  // namespace

HermitianFourierTable eisenstein_table(unsigned k, const Field& f, Int trace_bound) {
  std::vector<HermitianIndex> indices = field::enumerate_psd(f, trace_bound);
  AlphaStarCache cache(k, f.delta());
  cache.ensure(max_scaled_det(f, trace_bound));
  std::vector<Rational> values(indices.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t i = 0; i < indices.size(); ++i)
    values[i] = table_coefficient(cache, f, indices[i]);
  std::vector<HermitianFourierTable::Entry> entries;
  entries.reserve(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    entries.emplace_back(indices[i], std::move(values[i]));
  return HermitianFourierTable(f, k, trace_bound, std::move(entries));
}

HermitianFourierTable eisenstein_table_serial(unsigned k, const Field& f, Int trace_bound) {
  std::vector<HermitianFourierTable::Entry> entries;
  for (const HermitianIndex& t : field::enumerate_psd(f, trace_bound))
    entries.emplace_back(t, eisenstein_coefficient(k, f, t));
  return HermitianFourierTable(f, k, trace_bound, std::move(entries));
}

namespace {

void check_same_field(const HermitianFourierTable& a, const HermitianFourierTable& b) {
  if (!(a.field() == b.field()))
    throw std::invalid_argument("hermitian tables: mixed fields");
}

}  // namespace

HermitianFourierTable multiply(const HermitianFourierTable& a, const HermitianFourierTable& b) {
  check_same_field(a, b);
  const Field& f = a.field();
  Int d = f.delta_value();
  Int bound = std::min(a.trace_bound(), b.trace_bound());
  std::vector<HermitianIndex> outs = field::enumerate_psd(f, bound);
  std::vector<Rational> values(outs.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::size_t i = 0; i < outs.size(); ++i) {
    const HermitianIndex& t = outs[i];
    Rational acc = 0;
    for (Int n1 = 0; n1 <= t.n; ++n1) {
      for (Int m1 = 0; m1 <= t.m; ++m1) {
        Int cap1 = f.abs_delta() * n1 * m1;
        Int cap2 = f.abs_delta() * (t.n - n1) * (t.m - m1);
        Int qmax = isqrt(4 * n1 * m1);
        for (Int q1 = -qmax; q1 <= qmax; ++q1) {
          Int disc = d * q1 * q1 + 4 * cap1;
          if (disc < 0) continue;
          Int s = isqrt(disc);
          Int plo = floor_div(-d * q1 - s + 1, 2);
          Int phi = floor_div(-d * q1 + s, 2);
          for (Int p1 = plo; p1 <= phi; ++p1) {
            if (field::norm(f, {p1, q1}) > cap1) continue;
            if (field::norm(f, {t.p - p1, t.q - q1}) > cap2) continue;
            const Rational* av = a.find({n1, m1, p1, q1});
            if (!av) continue;
            const Rational* bv = b.find({t.n - n1, t.m - m1, t.p - p1, t.q - q1});
            if (!bv) continue;
            acc += *av * *bv;
          }
        }
      }
    }
    values[i] = std::move(acc);
  }
  std::vector<HermitianFourierTable::Entry> entries;
  for (std::size_t i = 0; i < outs.size(); ++i)
    if (values[i] != 0) entries.emplace_back(outs[i], std::move(values[i]));
  return HermitianFourierTable(f, a.weight() + b.weight(), bound, std::move(entries));
}

HermitianFourierTable multiply_serial(const HermitianFourierTable& a,
                                      const HermitianFourierTable& b) {
  check_same_field(a, b);
  Int bound = std::min(a.trace_bound(), b.trace_bound());
  std::map<HermitianIndex, Rational, field::HermitianIndexLess> acc;
  for (const auto& [t1, x] : a.entries()) {
    for (const auto& [t2, y] : b.entries()) {
      HermitianIndex t{t1.n + t2.n, t1.m + t2.m, t1.p + t2.p, t1.q + t2.q};
      if (t.trace() > bound) continue;
      acc[t] += x * y;
    }
  }
  std::vector<HermitianFourierTable::Entry> entries(acc.begin(), acc.end());
  return HermitianFourierTable(a.field(), a.weight() + b.weight(), bound, std::move(entries));
}

HermitianFourierTable linear_combination(
    std::span<const std::pair<Rational, const HermitianFourierTable*>> terms) {
  if (terms.empty()) throw std::invalid_argument("linear_combination: no terms");
  const Field& f = terms.front().second->field();
  unsigned weight = terms.front().second->weight();
  Int bound = terms.front().second->trace_bound();
  for (const auto& [c, t] : terms) {
    if (!(t->field() == f)) throw std::invalid_argument("linear_combination: mixed fields");
    bound = std::min(bound, t->trace_bound());
  }
  std::map<HermitianIndex, Rational, field::HermitianIndexLess> acc;
  for (const auto& [c, t] : terms) {
    if (c == 0) continue;
    for (const auto& [idx, v] : t->entries())
      if (idx.trace() <= bound) acc[idx] += c * v;
  }
  std::vector<HermitianFourierTable::Entry> entries(acc.begin(), acc.end());
  return HermitianFourierTable(f, weight, bound, std::move(entries));
}

JacobiSlice fourier_jacobi_slice(const HermitianFourierTable& table, Int m) {
  if (m < 0 || m > table.trace_bound())
    throw std::invalid_argument("fourier_jacobi_slice: index out of range");
  JacobiSlice slice;
  for (const auto& [t, v] : table.entries())
    if (t.m == m) slice[{t.n, t.p, t.q}] = v;
  return slice;
}

TruncatedValue evaluate_truncated(const HermitianFourierTable& table, double y) {
  if (!(y > 0)) throw std::invalid_argument("evaluate_truncated: y must be positive");
  double value = 0.0;
  double max_abs = 0.0;
  for (const auto& [t, v] : table.entries()) {
    double c = to_double(v);
    value += c * std::exp(-2.0 * M_PI * y * static_cast<double>(t.trace()));
    max_abs = std::max(max_abs, std::fabs(c));
  }
  double tail = 0.0;
  double abs_d = static_cast<double>(table.field().abs_delta());
  for (Int t = table.trace_bound() + 1;; ++t) {
    double term = 4.0 * static_cast<double>(t + 1) *
                  (abs_d * static_cast<double>(t) * static_cast<double>(t) + 1.0) *
                  std::exp(-2.0 * M_PI * y * static_cast<double>(t));
    tail += term;
    if (term < 1e-300 || t > table.trace_bound() + 10000) break;
  }
  return {value, max_abs * tail};
}

}  // namespace hermeis::hermitian
