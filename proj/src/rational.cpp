#include "hermeis/rational.hpp"

namespace hermeis {

std::string to_fraction_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

mpz_class int_pow(const mpz_class& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  bool invert = exp < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
  if (invert && base == 0) throw std::domain_error("rational_pow: 0 to negative power");
  mpz_class num = int_pow(base.get_num(), e);
  mpz_class den = int_pow(base.get_den(), e);
  if (invert) std::swap(num, den);
  return make_rational(std::move(num), std::move(den));
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace hermeis
