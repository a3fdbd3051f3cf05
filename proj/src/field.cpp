#include "qcover/field.hpp"

#include <numeric>
#include <stdexcept>

#include "qcover/errors.hpp"

namespace qcover {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("rational product overflows 64 bits");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("rational sum overflows 64 bits");
  return r;
}

Scalar normalize(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  return {n, d};
}

}  // namespace

bool is_prime_number(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

Field Field::prime(std::int64_t p) {
  if (!is_prime_number(p)) throw SchemaError("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (std::int64_t{1} << 31)) throw SchemaError("prime too large for 64-bit products");
  return Field(Kind::Prime, p);
}

Field Field::rationals() { return Field(Kind::Rational, 0); }

Scalar Field::from_int(std::int64_t v) const {
  if (kind_ == Kind::Prime) {
    std::int64_t r = v % p_;
    return {r < 0 ? r + p_ : r, 1};
  }
  return {v, 1};
}

Scalar Field::from_fraction(std::int64_t n, std::int64_t d) const {
  if (kind_ == Kind::Prime) return div(from_int(n), from_int(d));
  return normalize(n, d);
}

Scalar Field::parse(const std::string& text) const {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) throw SchemaError("bad scalar literal '" + text + "'");
      return from_int(v);
    }
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    std::int64_t n = std::stoll(a, &used);
    if (used != a.size()) throw SchemaError("bad scalar literal '" + text + "'");
    std::int64_t d = std::stoll(b, &used);
    if (used != b.size()) throw SchemaError("bad scalar literal '" + text + "'");
    if (d == 0) throw SchemaError("zero denominator in '" + text + "'");
    if (kind_ == Kind::Prime && from_int(d).is_zero())
      throw SchemaError("denominator vanishes in the field: '" + text + "'");
    return from_fraction(n, d);
  } catch (const std::invalid_argument&) {
    throw SchemaError("bad scalar literal '" + text + "'");
  } catch (const std::out_of_range&) {
    throw SchemaError("scalar literal out of range '" + text + "'");
  }
}

std::string Field::format(const Scalar& s) const {
  if (s.den == 1) return std::to_string(s.num);
  return std::to_string(s.num) + "/" + std::to_string(s.den);
}

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  if (kind_ == Kind::Prime) {
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p_, nr = a.num;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p_;
    return {t, 1};
  }
  return normalize(a.den, a.num);
}

Scalar Field::add_q(const Scalar& a, const Scalar& b) const {
  if (a.den == 1 && b.den == 1) return {checked_add(a.num, b.num), 1};
  std::int64_t g = std::gcd(a.den, b.den);
  std::int64_t l = checked_mul(a.den / g, b.den);
  std::int64_t n = checked_add(checked_mul(a.num, l / a.den), checked_mul(b.num, l / b.den));
  return normalize(n, l);
}

Scalar Field::mul_q(const Scalar& a, const Scalar& b) const {
  if (a.num == 0 || b.num == 0) return {0, 1};
  std::int64_t g1 = std::gcd(a.num, b.den), g2 = std::gcd(b.num, a.den);
  std::int64_t n = checked_mul(a.num / g1, b.num / g2);
  std::int64_t d = checked_mul(a.den / g2, b.den / g1);
  return normalize(n, d);
}

}  // namespace qcover
