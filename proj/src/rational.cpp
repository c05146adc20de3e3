#include "degen/rational.hpp"

#include <climits>
#include <utility>

#include "degen/errors.hpp"

namespace degen {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Exact integer root; nullopt when `value` is not a perfect `degree`-th power.
std::optional<mpz_class> exact_root(const mpz_class& value, unsigned long degree) {
  if (sgn(value) < 0) {
    if (degree % 2 == 0) return std::nullopt;
    auto r = exact_root(-value, degree);
    if (!r) return std::nullopt;
    return mpz_class(-*r);
  }
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), degree) == 0) return std::nullopt;
  return root;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (sgn(value_.get_den()) == 0) throw DomainError("zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw ParseError("not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

long Rational::to_long() const {
  if (!is_integer()) throw DomainError(str() + " is not an integer");
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) throw DomainError(str() + " does not fit a machine integer");
  return n.get_si();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

std::optional<Rational> Rational::pow_exact(const Rational& alpha) const {
  if (alpha.is_integer()) {
    if (is_zero() && alpha.sign() < 0) return std::nullopt;
    return pow(alpha.to_long());
  }
  const mpz_class& q = alpha.raw().get_den();
  if (!q.fits_ulong_p()) return std::nullopt;
  if (is_zero()) {
    if (alpha.sign() > 0) return Rational(0);
    return std::nullopt;
  }
  auto num_root = exact_root(value_.get_num(), q.get_ui());
  auto den_root = exact_root(value_.get_den(), q.get_ui());
  if (!num_root || !den_root) return std::nullopt;
  Rational root(mpq_class(*num_root, *den_root));
  const mpz_class& p = alpha.raw().get_num();
  if (!p.fits_slong_p()) return std::nullopt;
  return root.pow(p.get_si());
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative " + std::to_string(n));
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

Rational binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial with negative n=" + std::to_string(n));
  if (k < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(b));
}

}  // namespace degen
