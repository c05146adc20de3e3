#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace degen {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Backed by GMP so numerators and denominators are unbounded.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(long numerator, long denominator);

  explicit Rational(mpq_class value);

  /// Parses "p", "-p", "p/q". Whitespace is not accepted.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  /// Value as a machine integer. Throws DomainError when not integral or out of range.
  long to_long() const;

  Rational abs() const;
  Rational inverse() const;

  /// Integer power; negative exponents invert. 0^negative throws.
  Rational pow(long exponent) const;

  /// this^alpha when the result is rational (perfect powers only), nullopt otherwise.
  std::optional<Rational> pow_exact(const Rational& alpha) const;

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

/// n! as an exact integer. Throws DomainError for n < 0.
Rational factorial(long n);

/// Binomial coefficient; zero outside 0 <= k <= n. Throws DomainError for n < 0.
Rational binomial(long n, long k);

}  // namespace degen
