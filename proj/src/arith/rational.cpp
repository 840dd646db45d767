#include "specta/arith/rational.hpp"

#include <cctype>

#include "specta/error.hpp"

namespace specta {

Rational makeRational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InputError, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational makeRational(long num, long den) {
  return makeRational(Integer(num), Integer(den));
}

Rational parseRational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty number");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (negative || (!whole.empty() && whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    for (char c : whole + frac) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(ErrorKind::ParseError, "bad decimal literal '" + s + "'");
    }
    Integer den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Integer num(whole + frac, 10);
    if (negative) num = -num;
    return makeRational(num, den);
  }
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorKind::ParseError, "bad rational literal '" + s + "'");
  q.canonicalize();
  return q;
}

std::string toString(const Rational& q) { return q.get_str(); }
std::string toString(const Integer& z) { return z.get_str(); }

Integer floorOf(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceilOf(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

namespace {

// lo <= hi, lo > 0.
Rational simplestPositive(const Rational& lo, const Rational& hi) {
  Integer c = ceilOf(lo);
  if (Rational(c) <= hi) return Rational(c);
  Integer f = floorOf(lo);
  Rational inner = simplestPositive(1 / (hi - f), 1 / (lo - f));
  return Rational(f) + 1 / inner;
}

}  // namespace

Rational simplestBetween(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw Error(ErrorKind::InputError, "simplestBetween: empty interval");
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (lo > 0) return simplestPositive(lo, hi);
  return -simplestPositive(-hi, -lo);
}

bool rationalSqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return false;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = makeRational(n, d);
  return true;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational power(const Rational& base, unsigned long exp) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), exp);
  return makeRational(n, d);
}

}  // namespace specta
