#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hermeis/bernoulli.hpp"
#include "hermeis/characters.hpp"
#include "hermeis/discriminant.hpp"
#include "hermeis/intmath.hpp"
#include "hermeis/zeta.hpp"

using namespace hermeis;
using namespace hermeis::arith;

namespace {

// Legendre symbol by quadratic-residue enumeration.
int legendre_bruteforce(Int n, Int p) {
  n = mod_norm(n, p);
  if (n == 0) return 0;
  for (Int x = 1; x < p; ++x)
    if (mod_norm(x * x, p) == n) return 1;
  return -1;
}

std::vector<Int> fundamental_in_range(Int lo, Int hi) {
  std::vector<Int> out;
  for (Int d = lo; d <= hi; ++d)
    if (d != 0 && is_fundamental_discriminant(d)) out.push_back(d);
  return out;
}

}  // namespace

TEST_CASE("kronecker: pinned values") {
  CHECK(kronecker(1, 7) == 1);
  CHECK(kronecker(-4, 3) == -1);
  CHECK(kronecker(-3, 2) == -1);
  CHECK(kronecker(8, -1) == 1);
  CHECK(kronecker(-8, -1) == -1);
  CHECK_THROWS_AS(kronecker(-5, 3), std::invalid_argument);
  CHECK_THROWS_AS(kronecker(6, 1), std::invalid_argument);
}

TEST_CASE("kronecker: chi_{-4} is the odd character mod 4") {
  for (Int n = -51; n <= 51; n += 2)
    CHECK(kronecker(-4, n) == (mod_norm(n, 4) == 1 ? 1 : -1));
}

TEST_CASE("kronecker: odd prime discriminants match Legendre enumeration") {
  for (Int p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int pstar = (mod_norm(p, 4) == 1) ? p : -p;
    for (Int n = 0; n <= 2 * p; ++n)
      CHECK(kronecker(pstar, n) == legendre_bruteforce(n, p));
  }
}

TEST_CASE("kronecker: multiplicativity, period, vanishing locus") {
  for (Int d : fundamental_in_range(-100, 100)) {
    for (Int m = -50; m <= 50; ++m)
      for (Int n = -50; n <= 50; ++n)
        CHECK(kronecker(d, m * n) == kronecker(d, m) * kronecker(d, n));
    Int q = d < 0 ? -d : d;
    for (Int n = -30; n <= 30; ++n) {
      CHECK(kronecker(d, n + q) == kronecker(d, n));
      CHECK((kronecker(d, n) == 0) == (d != 1 && gcd(n, d) > 1));
    }
  }
}

TEST_CASE("kronecker: product over the prime-discriminant factorization") {
  for (Int d : fundamental_in_range(-100, 100)) {
    Discriminant disc(d);
    Int q = d < 0 ? -d : d;
    for (Int n = 1; n <= q; ++n) {
      int prod = 1;
      for (Int dj : disc.prime_factors()) prod *= kronecker(dj, n);
      CHECK(kronecker(d, n) == prod);
    }
  }
}

TEST_CASE("fundamental discriminants: recognition") {
  std::vector<Int> expected = {-3, -4, -7, -8, -11, -15, -19, -20, -23, -24};
  CHECK(negative_fundamental_discriminants(1, 24) == expected);
  CHECK(is_fundamental_discriminant(1));
  CHECK(is_fundamental_discriminant(5));
  CHECK(is_fundamental_discriminant(8));
  CHECK_FALSE(is_fundamental_discriminant(-5));
  CHECK_FALSE(is_fundamental_discriminant(-9));
  CHECK_FALSE(is_fundamental_discriminant(-12));
  CHECK_FALSE(is_fundamental_discriminant(0));
}

TEST_CASE("prime-discriminant factorization: pinned lists") {
  CHECK(factor_prime_discriminants(-4) == std::vector<Int>{-4});
  CHECK(factor_prime_discriminants(-24) == std::vector<Int>{8, -3});
  CHECK(factor_prime_discriminants(-15) == std::vector<Int>{5, -3});
  CHECK(factor_prime_discriminants(1).empty());
  CHECK_THROWS_AS(factor_prime_discriminants(-5), std::invalid_argument);
}

TEST_CASE("prime-discriminant factorization: unique subset-product oracle") {
  // Candidate prime discriminants built from the primes of |d|; exactly one
  // sub-multiset (here: subset) multiplies to d.
  for (Int d : fundamental_in_range(-100, 100)) {
    if (d == 1) continue;
    std::vector<Int> candidates;
    for (auto& [p, e] : factorize(d < 0 ? -d : d)) {
      if (p == 2) {
        candidates.push_back(-4);
        candidates.push_back(8);
        candidates.push_back(-8);
      } else {
        candidates.push_back(mod_norm(p, 4) == 1 ? p : -p);
      }
    }
    std::vector<std::vector<Int>> hits;
    for (std::size_t mask = 0; mask < (std::size_t{1} << candidates.size()); ++mask) {
      Int prod = 1;
      std::vector<Int> subset;
      for (std::size_t j = 0; j < candidates.size(); ++j)
        if (mask & (std::size_t{1} << j)) {
          prod *= candidates[j];
          subset.push_back(candidates[j]);
        }
      if (prod == d) hits.push_back(subset);
    }
    REQUIRE(hits.size() == 1);
    std::vector<Int> got = factor_prime_discriminants(d);
    std::sort(got.begin(), got.end());
    std::sort(hits[0].begin(), hits[0].end());
    CHECK(got == hits[0]);
    for (Int f : got) {
      CHECK(is_fundamental_discriminant(f));
      CHECK(factorize(f < 0 ? -f : f).size() == 1);
    }
  }
}

TEST_CASE("fundamental divisor pairs") {
  Discriminant d4(-4);
  CHECK(fundamental_divisor_pairs(d4) ==
        std::vector<std::pair<Int, Int>>{{1, -4}, {-4, 1}});
  Discriminant d3(-3);
  CHECK(fundamental_divisor_pairs(d3) ==
        std::vector<std::pair<Int, Int>>{{1, -3}, {-3, 1}});
  Discriminant d24(-24);
  auto pairs = fundamental_divisor_pairs(d24);
  CHECK(pairs == std::vector<std::pair<Int, Int>>{{1, -24}, {8, -3}, {-3, 8}, {-24, 1}});
  for (auto& [a, b] : pairs) {
    CHECK(a * b == -24);
    CHECK(is_fundamental_discriminant(a));
    CHECK(is_fundamental_discriminant(b));
  }
}

TEST_CASE("bernoulli: pinned values and recurrence oracle") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == make_rational(-1, 2));
  CHECK(bernoulli(4) == make_rational(-1, 30));
  CHECK(bernoulli(6) == make_rational(1, 42));
  for (unsigned n = 3; n <= 41; n += 2) CHECK(bernoulli(n) == 0);
  // sum_{j<n} C(n,j) B_j = 0 for n >= 2 under the B_1 = -1/2 convention.
  for (unsigned n = 2; n <= 42; ++n) {
    Rational sum = 0;
    for (unsigned j = 0; j < n; ++j) sum += Rational(binomial(n, j)) * bernoulli(j);
    CHECK(sum == 0);
  }
}

TEST_CASE("bernoulli polynomial") {
  for (unsigned n = 0; n <= 12; ++n) {
    CHECK(bernoulli_polynomial(n, Rational(0)) == bernoulli(n));
    if (n >= 2) CHECK(bernoulli_polynomial(n, Rational(1)) == bernoulli(n));
  }
  CHECK(bernoulli_polynomial(3, make_rational(1, 4)) == make_rational(3, 64));
  CHECK(bernoulli_polynomial(3, make_rational(3, 4)) == make_rational(-3, 64));
}

namespace {

// Generating-function oracle for B_{n,chi}: coefficients of
//   sum_{a=1}^{q} chi(a) t e^{at} / (e^{qt} - 1) = sum_n B_{n,chi} t^n / n!.
// Series arithmetic on rational coefficient vectors, independent of the
// Bernoulli-polynomial character sum used by the library.
Rational generalized_bernoulli_oracle(unsigned n, Int d) {
  Int q = d < 0 ? -d : d;
  std::size_t len = n + 2;
  // numerator N(t) = sum_j (sum_a chi(a) a^j) t^(j+1) / j!, divided by t
  std::vector<Rational> num(len, Rational(0));
  for (std::size_t j = 0; j < len; ++j) {
    Rational s = 0;
    for (Int a = 1; a <= q; ++a) {
      int chi = kronecker(d, a);
      if (chi == 0) continue;
      Rational apow(int_pow(mpz_class(static_cast<long>(a)), j));
      s += chi > 0 ? apow : -apow;
    }
    mpz_class jfact;
    mpz_fac_ui(jfact.get_mpz_t(), static_cast<unsigned long>(j));
    num[j] = s / Rational(jfact);
  }
  // denominator (e^{qt} - 1)/(qt) = sum_j q^j t^j / (j+1)!
  std::vector<Rational> den(len, Rational(0));
  for (std::size_t j = 0; j < len; ++j) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(j + 1));
    den[j] = Rational(int_pow(mpz_class(static_cast<long>(q)), j)) / Rational(fact);
  }
  // series division: result * den = num
  std::vector<Rational> res(len, Rational(0));
  for (std::size_t j = 0; j < len; ++j) {
    Rational acc = num[j];
    for (std::size_t i = 0; i < j; ++i) acc -= res[i] * den[j - i];
    res[j] = acc / den[0];
  }
  mpz_class nfact;
  mpz_fac_ui(nfact.get_mpz_t(), n);
  return res[n] / make_rational(mpz_class(static_cast<long>(q)), nfact);
}

}  // namespace

TEST_CASE("generalized bernoulli: pinned values") {
  CHECK(generalized_bernoulli(3, Discriminant(-4)) == make_rational(3, 2));
  CHECK(generalized_bernoulli(3, Discriminant(-3)) == make_rational(2, 3));
  CHECK(generalized_bernoulli(1, Discriminant(1)) == make_rational(-1, 2));
}

TEST_CASE("generalized bernoulli: generating-function oracle") {
  for (Int d : fundamental_in_range(-24, 24)) {
    if (d == 1) continue;
    for (unsigned n = 1; n <= 8; ++n)
      CHECK(generalized_bernoulli(n, Discriminant(d)) == generalized_bernoulli_oracle(n, d));
  }
}

TEST_CASE("generalized bernoulli: sign of B_k B_{k-1,chi} for imaginary fields") {
  for (Int d : negative_fundamental_discriminants(3, 40)) {
    for (unsigned k = 4; k <= 12; k += 2) {
      Rational prod = bernoulli(k) * generalized_bernoulli(k - 1, Discriminant(d));
      CHECK(prod < 0);
    }
  }
}

TEST_CASE("zeta enclosure: pinned and structural") {
  ZetaEnclosure one = zeta_enclosure(2, 1);
  CHECK(one.lower == 1);
  CHECK(one.upper == 2);

  ZetaEnclosure z8 = zeta_enclosure(8, 10);
  // zeta(8) = 1.00407735619794433..., bracketed to better than 1e-6
  CHECK(z8.contains(rational_from_string("10040773561979443/10000000000000000")));
  CHECK(z8.width() < make_rational(1, 1000000));

  Rational prev = 0;
  for (unsigned n = 1; n <= 12; ++n) {
    ZetaEnclosure z = zeta_enclosure(5, n);
    CHECK(z.lower > prev);
    prev = z.lower;
  }
}

TEST_CASE("sharp zeta bracket and the certified pi bracket") {
  for (unsigned s : {2u, 3u, 5u}) {
    ZetaEnclosure plain = zeta_enclosure(s, 200);
    ZetaEnclosure sharp = zeta_enclosure_sharp(s, 200);
    CHECK(sharp.lower >= plain.lower);
    CHECK(sharp.upper == plain.upper);
    CHECK(sharp.width() < plain.width());
    CHECK(sharp.contains(zeta_enclosure_sharp(s, 2000).lower));
  }
  ZetaEnclosure pi = pi_enclosure();
  // pi truncated and rounded up at twenty places pins the whole bracket
  CHECK(pi.lower > rational_from_string("314159265358979323846/100000000000000000000"));
  CHECK(pi.upper < rational_from_string("314159265358979323847/100000000000000000000"));
  CHECK(pi.width() < rational_pow(make_rational(1, 10), 40));
  // consistency with the zeta(2) route
  ZetaEnclosure pi2 = pi_squared_enclosure(512);
  CHECK(pi2.lower <= pi.lower * pi.lower);
  CHECK(pi.upper * pi.upper <= pi2.upper);
}

TEST_CASE("zeta identity for |B_k|: |B_k| (2pi)^k = 2 k! zeta(k)") {
  // Interval-consistency form: both sides squared, pi^2 through its rational
  // bracket. The brackets of the two sides must overlap for every even k.
  ZetaEnclosure pi2 = pi_squared_enclosure(2048);
  for (unsigned k = 4; k <= 20; k += 2) {
    Rational bk2 = bernoulli(k) * bernoulli(k);
    ZetaEnclosure pi2k = enclosure_pow(pi2, k);
    Rational four_k = rational_pow(Rational(4), k);
    // lhs interval: B_k^2 4^k (pi^2)^k
    Rational lhs_lo = bk2 * four_k * pi2k.lower;
    Rational lhs_hi = bk2 * four_k * pi2k.upper;
    mpz_class kfact;
    mpz_fac_ui(kfact.get_mpz_t(), k);
    Rational c = 4 * Rational(kfact) * Rational(kfact);
    ZetaEnclosure zk = zeta_enclosure(k, 64);
    Rational rhs_lo = c * zk.lower * zk.lower;
    Rational rhs_hi = c * zk.upper * zk.upper;
    CHECK(lhs_lo <= rhs_hi);
    CHECK(rhs_lo <= lhs_hi);
  }
}

TEST_CASE("L-value bracket for |B_{k-1,chi}|") {
  // (2pi)^(k-1) |B_{k-1,chi}| / (2 (k-1)! |d|^(k-3/2)) lies in
  // [2 - zeta(k-1), zeta(k-1)]; squared to keep sqrt(|d|) rational. The
  // brackets may only fail to order the exact midpoint by less than their
  // widths, so the comparison is interval-consistency.
  ZetaEnclosure pi2 = pi_squared_enclosure(2048);
  for (Int d : negative_fundamental_discriminants(3, 100)) {
    for (unsigned k = 4; k <= 12; k += 2) {
      Rational b = generalized_bernoulli(k - 1, Discriminant(d));
      ZetaEnclosure pi2k = enclosure_pow(pi2, k - 1);
      Rational four_pow = rational_pow(Rational(4), k - 1);
      mpz_class fact;
      mpz_fac_ui(fact.get_mpz_t(), k - 1);
      Rational denom = 4 * Rational(fact) * Rational(fact) *
                       rational_pow(rational_of(-d), 2 * k - 3);
      Rational x_lo = b * b * four_pow * pi2k.lower / denom;
      Rational x_hi = b * b * four_pow * pi2k.upper / denom;
      ZetaEnclosure z = zeta_enclosure(k - 1, 512);
      Rational lo_hi = (2 - z.lower) * (2 - z.lower);  // upper bracket of (2-zeta)^2
      Rational lo_lo = (2 - z.upper) * (2 - z.upper);
      Rational hi_hi = z.upper * z.upper;
      Rational hi_lo = z.lower * z.lower;
      CHECK(x_hi >= lo_lo);  // not provably below the lower constant
      CHECK(x_lo <= hi_hi);  // not provably above the upper constant
      (void)lo_hi;
      (void)hi_lo;
    }
  }
}
