#include "hermeis/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hermeis/intmath.hpp"

namespace hermeis::field {

Field::Field(Int delta) : delta_(delta) {
  if (delta >= 0) throw std::invalid_argument("Field: discriminant must be negative");
}

Field::Field(arith::Discriminant delta) : delta_(std::move(delta)) {
  if (delta_.value() >= 0)
    throw std::invalid_argument("Field: discriminant must be negative");
}

Int norm(const Field& f, const IntegerElement& v) {
  Int d = f.delta_value();
  return v.p * v.p + d * v.p * v.q + v.q * v.q * f.norm_omega();
}

Int scaled_det(const Field& f, const HermitianIndex& t) {
  return f.abs_delta() * t.n * t.m - norm(f, t.v());
}

bool is_positive_semidefinite(const Field& f, const HermitianIndex& t) {
  return t.n >= 0 && t.m >= 0 && scaled_det(f, t) >= 0;
}

Int content(const HermitianIndex& t) {
  if (t.is_zero()) throw std::domain_error("content: zero index");
  return gcd(gcd(t.n, t.m), gcd(t.p, t.q));
}

namespace {

// p-interval of the ellipse N(p + q*omega) <= bound for fixed q; empty when
// the discriminant |delta|(4*cap - q^2) is negative, where bound = |delta|*cap.
struct PRange {
  Int lo, hi;  // inclusive; lo > hi means empty
};

PRange p_range(const Field& f, Int q, Int norm_bound) {
  // N(p + q*omega) <= B  <=>  (2p + delta*q)^2 <= delta*q^2 + 4B
  Int d = f.delta_value();
  Int disc = d * q * q + 4 * norm_bound;
  if (disc < 0) return {1, 0};
  Int s = isqrt(disc);
  Int lo = -d * q - s;  // 2p >= lo
  Int hi = -d * q + s;  // 2p <= hi
  return {floor_div(lo + 1, 2), floor_div(hi, 2)};
}

}  // namespace

std::vector<HermitianIndex> enumerate_psd(const Field& f, Int trace_bound) {
  if (trace_bound < 0) throw std::invalid_argument("enumerate_psd: negative trace bound");
  std::vector<HermitianIndex> out;
  for (Int n = 0; n <= trace_bound; ++n) {
    for (Int m = 0; n + m <= trace_bound; ++m) {
      Int cap = f.abs_delta() * n * m;
      Int qmax = isqrt(4 * n * m);
      for (Int q = -qmax; q <= qmax; ++q) {
        PRange r = p_range(f, q, cap);
        for (Int p = r.lo; p <= r.hi; ++p) {
          HermitianIndex t{n, m, p, q};
          if (norm(f, t.v()) <= cap) out.push_back(t);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), HermitianIndexLess{});
  return out;
}

Int a_delta_bruteforce(const Field& f, Int ell) {
  if (ell < 0) throw std::invalid_argument("a_delta_bruteforce: ell must be >= 0");
  Int d = f.delta_value();
  Int abs_d = -d;
  // Columns of the multiplication-by-sqrt(delta) lattice in the (1, omega)
  // basis: sqrt(delta) = -delta + 2*omega, sqrt(delta)*omega =
  // (delta - delta^2)/2 + delta*omega.
  Int a11 = -d, a21 = 2;
  Int a12 = (d - d * d) / 2, a22 = d;
  auto eg = extended_gcd(a11, a12);
  Int h11 = eg.g;  // > 0
  Int h22 = (a11 * a22 - a12 * a21) / eg.g;
  if (h22 < 0) h22 = -h22;
  // Hermite form of the lattice is [[h11, 0],[*, h22]] with h11*h22 =
  // |delta|, so the rectangle [0,h11) x [0,h22) is a complete set of coset
  // representatives.
  Int count = 0;
  for (Int x = 0; x < h11; ++x) {
    for (Int y = 0; y < h22; ++y) {
      Int nv = norm(f, {x, y});
      if (mod_norm(nv + ell, abs_d) == 0) ++count;
    }
  }
  return count;
}

std::string to_string(const HermitianIndex& t) {
  std::ostringstream os;
  os << t.n << "," << t.m << "," << t.p << "," << t.q;
  return os.str();
}

HermitianIndex hermitian_index_from_string(const std::string& s) {
  std::istringstream is(s);
  HermitianIndex t;
  char c1, c2, c3;
  if (!(is >> t.n >> c1 >> t.m >> c2 >> t.p >> c3 >> t.q) || c1 != ',' || c2 != ',' ||
      c3 != ',' || !(is >> std::ws).eof())
    throw std::invalid_argument("hermitian index: expected \"n,m,p,q\"");
  return t;
}

}  // namespace hermeis::field
