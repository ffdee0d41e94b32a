#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace friezekit {

/// Exact fraction over arbitrary-precision integers. Always kept in lowest
/// terms with a positive denominator, so structural equality is value
/// equality.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& value) : value_(value) {}
  /// Throws DomainError if `den` is zero.
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "p" or "p/q" in canonical form: q > 1, gcd(|p|, q) = 1, no
  /// leading '+' or redundant zeros. Returns nullopt on anything else.
  static std::optional<Rational> parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  /// Value as int64 when it is an integer in range.
  std::optional<std::int64_t> to_int64() const;

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError on a zero divisor.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Reduced form with positive denominator. Holds for every value this
  /// class hands out; exposed so tests can scan grids for it.
  bool is_canonical() const;

  std::size_t hash() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace friezekit

template <>
struct std::hash<friezekit::Rational> {
  std::size_t operator()(const friezekit::Rational& r) const noexcept { return r.hash(); }
};
