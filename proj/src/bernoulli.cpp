#include "hermeis/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace hermeis::arith {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // index n

// Akiyama-Tanigawa triangle; produces the B_1 = +1/2 convention, flipped at
// index 1 on store.
void extend_bernoulli_cache(unsigned n) {
  if (g_bernoulli.size() > n) return;
  unsigned start = static_cast<unsigned>(g_bernoulli.size());
  std::vector<Rational> row;
  row.reserve(n + 1);
  // Rebuild the triangle from scratch; rows are cheap at the sizes we use.
  for (unsigned m = 0; m <= n; ++m) {
    row.push_back(make_rational(1, static_cast<Int>(m) + 1));
    for (unsigned j = m; j >= 1; --j)
      row[j - 1] = rational_of(static_cast<Int>(j)) * (row[j - 1] - row[j]);
    if (m >= start) {
      Rational b = row[0];
      if (m == 1) b = -b;
      g_bernoulli.push_back(b);
    }
  }
}

}  // namespace

Rational bernoulli(unsigned n) {
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  extend_bernoulli_cache(n);
  return g_bernoulli[n];
}

std::vector<Rational> bernoulli_through(unsigned n) {
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  extend_bernoulli_cache(n);
  return {g_bernoulli.begin(), g_bernoulli.begin() + n + 1};
}

namespace {

// Horner coefficients C(n,i) B_i, i = 0..n, fetched off the lock once.
std::vector<Rational> bernoulli_polynomial_coefficients(unsigned n) {
  std::vector<Rational> coeffs = bernoulli_through(n);
  for (unsigned i = 1; i <= n; ++i) coeffs[i] *= Rational(binomial(n, i));
  return coeffs;
}

Rational evaluate_polynomial(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = coeffs.front();
  for (std::size_t i = 1; i < coeffs.size(); ++i) acc = acc * x + coeffs[i];
  return acc;
}

}  // namespace

Rational bernoulli_polynomial(unsigned n, const Rational& x) {
  return evaluate_polynomial(bernoulli_polynomial_coefficients(n), x);
}

Rational generalized_bernoulli(unsigned n, const Discriminant& d) {
  if (d.value() == 1) return bernoulli(n);
  Int q = d.value() < 0 ? -d.value() : d.value();
  std::vector<Rational> coeffs = bernoulli_polynomial_coefficients(n);
  Rational sum = 0;
  for (Int a = 1; a <= q; ++a) {
    int chi = d.chi(a);
    if (chi == 0) continue;
    Rational term = evaluate_polynomial(coeffs, make_rational(a, q));
    sum += chi > 0 ? term : -term;
  }
  return Rational(int_pow(mpz_class(static_cast<long>(q)), n - 1)) * sum;
}

}  // namespace hermeis::arith
