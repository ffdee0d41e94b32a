#include "friezekit/rational.hpp"

#include <ostream>

#include "friezekit/errors.hpp"

namespace friezekit {

namespace {

// Digits with no leading zero (except the single digit "0").
bool canonical_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return s.size() == 1 || s.front() != '0';
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  if (!canonical_digits(num_text)) return std::nullopt;
  mpz_class num(std::string(num_text), 10);
  if (negative) {
    if (num == 0) return std::nullopt;  // "-0"
    num = -num;
  }
  if (slash == std::string_view::npos) return Rational(num);

  const std::string_view den_text = text.substr(slash + 1);
  if (!canonical_digits(den_text)) return std::nullopt;
  const mpz_class den(std::string(den_text), 10);
  if (den <= 1) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) return std::nullopt;
  return Rational(num, den);
}

std::optional<std::int64_t> Rational::to_int64() const {
  if (!is_integer()) return std::nullopt;
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(n.get_si());
}

std::string Rational::str() const { return value_.get_str(10); }

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

bool Rational::is_canonical() const {
  if (sgn(value_.get_den()) <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return g == 1;
}

std::size_t Rational::hash() const {
  return std::hash<std::string>{}(str());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace friezekit
