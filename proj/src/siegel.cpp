#include "hermeis/siegel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hermeis/bernoulli.hpp"
#include "hermeis/discriminant.hpp"
#include "hermeis/intmath.hpp"

namespace hermeis::siegel {

Int content(const HalfIntMatrix& r) {
  if (r.is_zero()) throw std::domain_error("content: zero index");
  return gcd(gcd(r.a, r.b), r.c);
}

std::vector<HalfIntMatrix> enumerate_psd(Int trace_bound) {
  if (trace_bound < 0) throw std::invalid_argument("enumerate_psd: negative trace bound");
  std::vector<HalfIntMatrix> out;
  for (Int a = 0; a <= trace_bound; ++a) {
    for (Int c = 0; a + c <= trace_bound; ++c) {
      Int bmax = isqrt(4 * a * c);
      for (Int b = -bmax; b <= bmax; ++b) out.push_back({a, b, c});
    }
  }
  std::sort(out.begin(), out.end(), HalfIntMatrixLess{});
  return out;
}

Rational cohen_h(unsigned r, Int n) {
  if (r < 2) throw std::invalid_argument("cohen_h: r must be >= 2");
  if (n < 0) throw std::invalid_argument("cohen_h: N must be >= 0");
  if (n == 0)
    return -arith::bernoulli(2 * r) / rational_of(2 * static_cast<Int>(r));
  Int n4 = n % 4;
  if (n4 == 1 || n4 == 2) return Rational(0);
  Int m = (r % 2 == 1) ? -n : n;
  if (mod_norm(m, 4) != 0 && mod_norm(m, 4) != 1) return Rational(0);
  // m = D f^2 with D fundamental
  Int core = m < 0 ? -1 : 1;
  for (auto& [p, e] : factorize(m < 0 ? -m : m))
    if (e % 2 == 1) core *= p;
  Int d = (mod_norm(core, 4) == 1) ? core : 4 * core;
  Int f = isqrt(m / d);
  // L(1-r, chi_D) = -B_{r,chi_D}/r; for D = 1 this is zeta(1-r).
  Rational l_value = -arith::generalized_bernoulli(r, arith::Discriminant(d)) /
                     rational_of(static_cast<Int>(r));
  Rational sum = 0;
  for (Int dd : divisors(f)) {
    int mu = moebius(dd);
    if (mu == 0) continue;
    int chi = arith::kronecker(d, dd);
    if (chi == 0) continue;
    Rational term = Rational(int_pow(mpz_class(static_cast<long>(dd)), r - 1)) *
                    Rational(sigma_power(f / dd, 2 * r - 1));
    sum += (mu * chi > 0) ? term : -term;
  }
  return l_value * sum;
}

namespace {

Rational normalizing_zeta(unsigned k) {
  // zeta(3-2k) = -B_{2k-2}/(2k-2)
  return -arith::bernoulli(2 * k - 2) / rational_of(2 * static_cast<Int>(k) - 2);
}

Rational leading_factor(unsigned k) {
  return make_rational(-2 * static_cast<Int>(k), 1) / arith::bernoulli(k);
}

void check_weight(unsigned k) {
  if (k < 4 || k % 2 != 0)
    throw std::invalid_argument("siegel: weight must be even, >= 4");
}

}  // namespace

Rational siegel_coefficient(unsigned k, const HalfIntMatrix& r) {
  check_weight(k);
  if (!is_positive_semidefinite(r))
    throw std::domain_error("siegel_coefficient: index not positive semidefinite");
  if (r.is_zero()) return Rational(1);
  Int cont = content(r);
  Int n4 = r.det4();
  Rational sum = 0;
  for (Int d : divisors(cont))
    sum += Rational(int_pow(mpz_class(static_cast<long>(d)), k - 1)) *
           cohen_h(k - 1, n4 / (d * d));
  return leading_factor(k) * sum / normalizing_zeta(k);
}

Rational gamma_identity_closed_form(unsigned k) {
  check_weight(k);
  Rational num = rational_of(-4 * static_cast<Int>(k)) *
                 arith::generalized_bernoulli(k - 1, arith::Discriminant(-4));
  return num / (arith::bernoulli(k) * arith::bernoulli(2 * k - 2));
}

SiegelFourierTable::SiegelFourierTable(unsigned weight, Int trace_bound,
                                       std::vector<Entry> entries)
    : weight_(weight), trace_bound_(trace_bound), entries_(std::move(entries)) {
  std::erase_if(entries_, [](const Entry& e) { return e.second == 0; });
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    return HalfIntMatrixLess{}(a.first, b.first);
  });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].first.trace() > trace_bound_)
      throw std::invalid_argument("SiegelFourierTable: entry beyond trace bound");
    if (i > 0 && entries_[i].first == entries_[i - 1].first)
      throw std::invalid_argument("SiegelFourierTable: duplicate index");
  }
}

SiegelFourierTable SiegelFourierTable::zero(unsigned weight, Int trace_bound) {
  return SiegelFourierTable(weight, trace_bound, {});
}

const Rational* SiegelFourierTable::find(const HalfIntMatrix& r) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), r,
                             [](const Entry& e, const HalfIntMatrix& key) {
                               return HalfIntMatrixLess{}(e.first, key);
                             });
  if (it != entries_.end() && it->first == r) return &it->second;
  return nullptr;
}

Rational SiegelFourierTable::coefficient(const HalfIntMatrix& r) const {
  const Rational* v = find(r);
  return v ? *v : Rational(0);
}

namespace {

// Dense memo of H(k-1, n) for 0 <= n <= max; read-only once built.
class CohenCache {
 public:
  CohenCache(unsigned r, Int max_n) : r_(r) {
    values_.resize(static_cast<std::size_t>(max_n) + 1);
    arith::bernoulli(2 * r);  // settle the shared cache before going wide
#pragma omp parallel for schedule(dynamic, 8)
    for (Int n = 0; n <= max_n; ++n) values_[static_cast<std::size_t>(n)] = cohen_h(r_, n);
  }
  const Rational& at(Int n) const { return values_[static_cast<std::size_t>(n)]; }

 private:
  unsigned r_;
  std::vector<Rational> values_;
};

}  // namespace

SiegelFourierTable siegel_table(unsigned k, Int trace_bound) {
  check_weight(k);
  std::vector<HalfIntMatrix> indices = enumerate_psd(trace_bound);
  Int half = trace_bound / 2;
  CohenCache cache(k - 1, 4 * half * (trace_bound - half));
  Rational lead = leading_factor(k);
  Rational znorm = normalizing_zeta(k);
  std::vector<Rational> values(indices.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const HalfIntMatrix& r = indices[i];
    if (r.is_zero()) {
      values[i] = Rational(1);
      continue;
    }
    Rational sum = 0;
    for (Int d : divisors(content(r)))
      sum += Rational(int_pow(mpz_class(static_cast<long>(d)), k - 1)) *
             cache.at(r.det4() / (d * d));
    values[i] = lead * sum / znorm;
  }
  std::vector<SiegelFourierTable::Entry> entries;
  entries.reserve(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    entries.emplace_back(indices[i], std::move(values[i]));
  return SiegelFourierTable(k, trace_bound, std::move(entries));
}

SiegelFourierTable siegel_table_serial(unsigned k, Int trace_bound) {
  std::vector<SiegelFourierTable::Entry> entries;
  for (const HalfIntMatrix& r : enumerate_psd(trace_bound))
    entries.emplace_back(r, siegel_coefficient(k, r));
  return SiegelFourierTable(k, trace_bound, std::move(entries));
}

SiegelFourierTable multiply(const SiegelFourierTable& a, const SiegelFourierTable& b) {
  Int bound = std::min(a.trace_bound(), b.trace_bound());
  std::vector<HalfIntMatrix> outs = enumerate_psd(bound);
  std::vector<Rational> values(outs.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::size_t i = 0; i < outs.size(); ++i) {
    const HalfIntMatrix& r = outs[i];
    Rational acc = 0;
    for (Int a1 = 0; a1 <= r.a; ++a1) {
      for (Int c1 = 0; c1 <= r.c; ++c1) {
        Int bmax = isqrt(4 * a1 * c1);
        for (Int b1 = -bmax; b1 <= bmax; ++b1) {
          Int b2 = r.b - b1;
          if (b2 * b2 > 4 * (r.a - a1) * (r.c - c1)) continue;
          const Rational* x = a.find({a1, b1, c1});
          if (!x) continue;
          const Rational* y = b.find({r.a - a1, b2, r.c - c1});
          if (!y) continue;
          acc += *x * *y;
        }
      }
    }
    values[i] = std::move(acc);
  }
  std::vector<SiegelFourierTable::Entry> entries;
  for (std::size_t i = 0; i < outs.size(); ++i)
    if (values[i] != 0) entries.emplace_back(outs[i], std::move(values[i]));
  return SiegelFourierTable(a.weight() + b.weight(), bound, std::move(entries));
}

SiegelFourierTable multiply_serial(const SiegelFourierTable& a, const SiegelFourierTable& b) {
  Int bound = std::min(a.trace_bound(), b.trace_bound());
  std::map<HalfIntMatrix, Rational, HalfIntMatrixLess> acc;
  for (const auto& [r1, x] : a.entries())
    for (const auto& [r2, y] : b.entries()) {
      HalfIntMatrix r{r1.a + r2.a, r1.b + r2.b, r1.c + r2.c};
      if (r.trace() > bound) continue;
      acc[r] += x * y;
    }
  std::vector<SiegelFourierTable::Entry> entries(acc.begin(), acc.end());
  return SiegelFourierTable(a.weight() + b.weight(), bound, std::move(entries));
}

SiegelFourierTable linear_combination(
    std::span<const std::pair<Rational, const SiegelFourierTable*>> terms) {
  if (terms.empty()) throw std::invalid_argument("linear_combination: no terms");
  unsigned weight = terms.front().second->weight();
  Int bound = terms.front().second->trace_bound();
  for (const auto& [c, t] : terms) bound = std::min(bound, t->trace_bound());
  std::map<HalfIntMatrix, Rational, HalfIntMatrixLess> acc;
  for (const auto& [c, t] : terms) {
    if (c == 0) continue;
    for (const auto& [idx, v] : t->entries())
      if (idx.trace() <= bound) acc[idx] += c * v;
  }
  std::vector<SiegelFourierTable::Entry> entries(acc.begin(), acc.end());
  return SiegelFourierTable(weight, bound, std::move(entries));
}

MaassCheckResult maass_condition_check(const SiegelFourierTable& table) {
  MaassCheckResult result;
  unsigned k = table.weight();
  for (const HalfIntMatrix& r : enumerate_psd(table.trace_bound())) {
    if (r.is_zero()) continue;
    Int cont = content(r);
    std::vector<Int> ds = divisors(cont);
    bool in_bound = true;
    for (Int d : ds)
      if (r.a * r.c / (d * d) + 1 > table.trace_bound()) in_bound = false;
    if (!in_bound) {
      ++result.skipped;
      continue;
    }
    Rational rhs = 0;
    for (Int d : ds)
      rhs += Rational(int_pow(mpz_class(static_cast<long>(d)), k - 1)) *
             table.coefficient({r.a * r.c / (d * d), r.b / d, 1});
    if (table.coefficient(r) != rhs) {
      result.passed = false;
      if (!result.witness) result.witness = r;
    } else {
      ++result.verified;
    }
  }
  return result;
}

TruncatedValue evaluate_truncated(const SiegelFourierTable& table, double y) {
  if (!(y > 0)) throw std::invalid_argument("evaluate_truncated: y must be positive");
  double value = 0.0;
  double max_abs = 0.0;
  for (const auto& [r, v] : table.entries()) {
    double c = to_double(v);
    value += c * std::exp(-2.0 * M_PI * y * static_cast<double>(r.trace()));
    max_abs = std::max(max_abs, std::fabs(c));
  }
  double tail = 0.0;
  for (Int t = table.trace_bound() + 1;; ++t) {
    double term = static_cast<double>((t + 1) * (t + 2)) *
                  std::exp(-2.0 * M_PI * y * static_cast<double>(t));
    tail += term;
    if (term < 1e-300 || t > table.trace_bound() + 10000) break;
  }
  return {value, max_abs * tail};
}

std::string to_string(const HalfIntMatrix& r) {
  std::ostringstream os;
  os << r.a << "," << r.b << "," << r.c;
  return os.str();
}

HalfIntMatrix half_int_matrix_from_string(const std::string& s) {
  std::istringstream is(s);
  HalfIntMatrix r;
  char c1, c2;
  if (!(is >> r.a >> c1 >> r.b >> c2 >> r.c) || c1 != ',' || c2 != ',' ||
      !(is >> std::ws).eof())
    throw std::invalid_argument("siegel index: expected \"a,b,c\"");
  return r;
}

}  // namespace hermeis::siegel
