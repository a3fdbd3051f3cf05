#pragma once

#include <cstdint>
#include <compare>
#include <string>

namespace qcover {

/// A field element.  Over F_p only `num` is used (0 <= num < p, den == 1);
/// over Q the pair is a reduced fraction with den > 0.
struct Scalar {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool is_zero() const { return num == 0; }
  friend bool operator==(const Scalar&, const Scalar&) = default;
};

class Field {
 public:
  enum class Kind { Prime, Rational };

  static constexpr std::int64_t kDefaultPrime = 32003;

  static Field prime(std::int64_t p = kDefaultPrime);
  static Field rationals();

  Kind kind() const { return kind_; }
  std::int64_t characteristic() const { return kind_ == Kind::Prime ? p_ : 0; }
  bool is_prime() const { return kind_ == Kind::Prime; }

  Scalar zero() const { return {0, 1}; }
  Scalar one() const { return {1, 1}; }
  Scalar from_int(std::int64_t v) const;
  Scalar from_fraction(std::int64_t n, std::int64_t d) const;
  /// Decimal literal "12", "-3" or "p/q".
  Scalar parse(const std::string& text) const;
  std::string format(const Scalar& s) const;

  Scalar add(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::Prime) {
      std::int64_t v = a.num + b.num;
      return {v >= p_ ? v - p_ : v, 1};
    }
    return add_q(a, b);
  }
  Scalar neg(const Scalar& a) const {
    if (kind_ == Kind::Prime) return {a.num == 0 ? 0 : p_ - a.num, 1};
    return {-a.num, a.den};
  }
  Scalar sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }
  Scalar mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::Prime) return {(a.num * b.num) % p_, 1};
    return mul_q(a, b);
  }
  /// Throws std::domain_error on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Field(Kind k, std::int64_t p) : kind_(k), p_(p) {}
  Scalar add_q(const Scalar& a, const Scalar& b) const;
  Scalar mul_q(const Scalar& a, const Scalar& b) const;

  Kind kind_ = Kind::Prime;
  std::int64_t p_ = kDefaultPrime;
};

bool is_prime_number(std::int64_t p);

}  // namespace qcover
