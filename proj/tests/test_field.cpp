#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "hermeis/field.hpp"
#include "hermeis/hermitian.hpp"
#include "hermeis/intmath.hpp"

using namespace hermeis;
using namespace hermeis::field;

namespace {

// |p + q*omega|^2 evaluated in C and rounded; omega = (d + i sqrt(|d|))/2.
Int norm_complex_oracle(Int d, Int p, Int q) {
  double re = p + q * static_cast<double>(d) / 2.0;
  double im = q * std::sqrt(static_cast<double>(-d)) / 2.0;
  return std::llround(re * re + im * im);
}

// Every T >= 0 with n + m <= bound from a plain box scan.
std::vector<HermitianIndex> enumerate_box_oracle(const Field& f, Int bound) {
  std::vector<HermitianIndex> out;
  Int box = 2 * f.abs_delta() * bound * bound + 4;
  for (Int n = 0; n <= bound; ++n)
    for (Int m = 0; n + m <= bound; ++m)
      for (Int p = -box; p <= box; ++p)
        for (Int q = -box; q <= box; ++q) {
          HermitianIndex t{n, m, p, q};
          if (is_positive_semidefinite(f, t)) out.push_back(t);
        }
  std::sort(out.begin(), out.end(), HermitianIndexLess{});
  return out;
}

}  // namespace

TEST_CASE("field construction") {
  Field f(-3);
  CHECK(f.abs_delta() == 3);
  CHECK(f.norm_omega() == 3);
  CHECK(Field(-4).norm_omega() == 5);
  CHECK_THROWS_AS(Field(5), std::invalid_argument);
  CHECK_THROWS_AS(Field(-5), std::invalid_argument);
}

TEST_CASE("norm: pinned values and complex oracle") {
  CHECK(norm(Field(-3), {0, 1}) == 3);
  CHECK(norm(Field(-4), {0, 1}) == 5);
  CHECK(norm(Field(-7), {0, 0}) == 0);
  for (Int d : {-3, -4, -7, -8, -20}) {
    Field f(d);
    for (Int p = -20; p <= 20; ++p)
      for (Int q = -20; q <= 20; ++q) {
        Int nv = norm(f, {p, q});
        CHECK(nv == norm_complex_oracle(d, p, q));
        CHECK(nv >= 0);
        CHECK((nv == 0) == (p == 0 && q == 0));
      }
  }
}

TEST_CASE("norm: 4 N(v) = (2p + d q)^2 - d q^2") {
  for (Int d : {-3, -4, -7, -8}) {
    Field f(d);
    for (Int p = -20; p <= 20; ++p)
      for (Int q = -20; q <= 20; ++q) {
        Int lhs = 4 * norm(f, {p, q});
        Int s = 2 * p + d * q;
        CHECK(lhs == s * s - d * q * q);
      }
  }
}

TEST_CASE("content") {
  CHECK(content({2, 2, 0, 0}) == 2);
  CHECK(content({1, 1, 1, 0}) == 1);
  CHECK(content({4, 2, 2, 2}) == 2);
  CHECK_THROWS_AS(content({0, 0, 0, 0}), std::domain_error);

  // max-ell search oracle
  for (Int n = 0; n <= 4; ++n)
    for (Int m = 0; m <= 4; ++m)
      for (Int p = -4; p <= 4; ++p)
        for (Int q = -4; q <= 4; ++q) {
          HermitianIndex t{n, m, p, q};
          if (t.is_zero()) continue;
          Int best = 0;
          for (Int ell = 1; ell <= 8; ++ell)
            if (n % ell == 0 && m % ell == 0 && p % ell == 0 && q % ell == 0) best = ell;
          CHECK(content(t) == best);
        }
}

TEST_CASE("content scales linearly on primitive indices") {
  for (Int d = 1; d <= 5; ++d) {
    CHECK(content({d * 1, d * 1, d * 1, d * 0}) == d);
    CHECK(content({d * 2, d * 1, d * 0, d * 1}) == d);
    CHECK(content({d * 1, d * 3, d * 2, d * 1}) == d);
  }
}

TEST_CASE("enumerate_psd: trace bound 0") {
  Field f(-3);
  auto got = enumerate_psd(f, 0);
  REQUIRE(got.size() == 1);
  CHECK(got[0].is_zero());
}

TEST_CASE("enumerate_psd equals the box oracle") {
  for (Int d : {-3, -4, -7, -8, -15}) {
    Field f(d);
    for (Int bound = 0; bound <= 3; ++bound) {
      auto got = enumerate_psd(f, bound);
      auto expected = enumerate_box_oracle(f, bound);
      CHECK(got == expected);
      std::set<std::tuple<Int, Int, Int, Int>> unique;
      for (const auto& t : got) {
        CHECK(is_positive_semidefinite(f, t));
        CHECK(scaled_det(f, t) >= 0);
        if (!t.is_zero()) CHECK(content(t) >= 1);
        unique.insert({t.n, t.m, t.p, t.q});
      }
      CHECK(unique.size() == got.size());
    }
  }
}

TEST_CASE("enumerate_psd: cell count at delta=-3, n=m=1") {
  // 13 lattice points satisfy N(v) <= 3 (from the box oracle: zero, the six
  // units, and the six associates of sqrt(-3)).
  Field f(-3);
  Int count = 0;
  for (const auto& t : enumerate_psd(f, 2))
    if (t.n == 1 && t.m == 1) ++count;
  CHECK(count == 13);
}

TEST_CASE("psd criterion: zero diagonal forces zero off-diagonal") {
  Field f(-4);
  CHECK(is_positive_semidefinite(f, {0, 0, 0, 0}));
  CHECK_FALSE(is_positive_semidefinite(f, {0, 0, 1, 0}));
  CHECK_FALSE(is_positive_semidefinite(f, {0, 0, 0, 1}));
  CHECK_FALSE(is_positive_semidefinite(f, {1, 0, 1, 0}));
  CHECK(is_positive_semidefinite(f, {1, 0, 0, 0}));
}

TEST_CASE("a_delta_bruteforce: pinned and cross-checked") {
  CHECK(a_delta_bruteforce(Field(-4), 1) == 0);
  CHECK(a_delta_bruteforce(Field(-4), 3) == 2);
  CHECK(a_delta_bruteforce(Field(-3), 0) >= 1);
  // residue count equals the character product for every field in range
  for (Int dv : arith::negative_fundamental_discriminants(3, 100)) {
    Field f(dv);
    for (Int ell = 0; ell <= 200; ++ell)
      CHECK(a_delta_bruteforce(f, ell) == hermitian::a_delta(f.delta(), ell));
  }
}

TEST_CASE("index textual form") {
  HermitianIndex t{1, 2, -3, 4};
  CHECK(to_string(t) == "1,2,-3,4");
  CHECK(hermitian_index_from_string("1,2,-3,4") == t);
  CHECK_THROWS_AS(hermitian_index_from_string("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(hermitian_index_from_string("a,b,c,d"), std::invalid_argument);
  CHECK_THROWS_AS(hermitian_index_from_string("1,2,3,4,5"), std::invalid_argument);
}
