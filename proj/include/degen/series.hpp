#pragma once

#include <functional>
#include <vector>

#include "degen/bipoly.hpp"
#include "degen/rational.hpp"

namespace degen {

/// Truncated power series f(t) = a_0 + a_1 t + ... + a_N t^N over ℚ[λ, x].
///
/// The truncation order N is explicit and inclusive. Binary operations
/// truncate to the smaller order of their operands. Family values follow the
/// exponential convention: the value at n is n! * a_n (see value()).
class EgfSeries {
 public:
  /// Zero series of the given order.
  explicit EgfSeries(int order);
  /// Series with coefficients a_0..a_N, N = coeffs.size() - 1.
  explicit EgfSeries(std::vector<BiPoly> coeffs);

  /// Series whose n-th exponential value is values[n] (a_n = values[n] / n!).
  static EgfSeries from_values(const std::vector<BiPoly>& values);
  static EgfSeries constant(const BiPoly& c, int order);
  /// The series `c * t`.
  static EgfSeries t(int order, const Rational& c = 1);
  /// Builds a_n = coeff(n) for n = 0..order.
  static EgfSeries generate(int order, const std::function<BiPoly(int)>& coeff);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BiPoly& coeff(int n) const;
  const std::vector<BiPoly>& coeffs() const { return coeffs_; }

  /// n! * a_n. Throws IndexBeyondTruncation when n > order().
  BiPoly value(int n) const;
  /// All values 0..order().
  std::vector<BiPoly> values() const;

  /// Discards coefficients above `order`; orders above the current one are clamped.
  EgfSeries truncate(int order) const;

  /// Applies `fn` to every coefficient (used for variable substitution).
  EgfSeries map(const std::function<BiPoly(const BiPoly&)>& fn) const;

  EgfSeries& operator+=(const EgfSeries& o);
  EgfSeries& operator-=(const EgfSeries& o);
  EgfSeries& operator*=(const EgfSeries& o);
  EgfSeries& operator*=(const BiPoly& c);

  friend EgfSeries operator+(EgfSeries a, const EgfSeries& b) { return a += b; }
  friend EgfSeries operator-(EgfSeries a, const EgfSeries& b) { return a -= b; }
  friend EgfSeries operator*(const EgfSeries& a, const EgfSeries& b);
  friend EgfSeries operator*(EgfSeries a, const BiPoly& c) { return a *= c; }
  friend EgfSeries operator*(const BiPoly& c, EgfSeries a) { return a *= c; }
  friend EgfSeries operator-(const EgfSeries& a);

  friend bool operator==(const EgfSeries&, const EgfSeries&) = default;

 private:
  std::vector<BiPoly> coeffs_;
};

/// f / g. g_0 must be a nonzero rational constant (DivisionByNonUnit otherwise).
EgfSeries series_div(const EgfSeries& f, const EgfSeries& g);

/// f / t^m with the order reduced by m. Throws NonzeroLowOrder if a_0..a_{m-1} are not all zero.
EgfSeries shift_div_t(const EgfSeries& f, int m);

/// f(g(t)) by Horner's scheme. Throws NonzeroConstantInner if g_0 != 0.
EgfSeries compose(const EgfSeries& f, const EgfSeries& g);

/// exp(f); requires f_0 = 0.
EgfSeries series_exp(const EgfSeries& f);
/// log(f); requires f_0 = 1.
EgfSeries series_log(const EgfSeries& f);

/// f^alpha; requires f_0 = 1. Integer alpha uses repeated squaring (with an
/// inverse for negative alpha); other alpha use exp(alpha * log f).
EgfSeries pow_rational(const EgfSeries& f, const Rational& alpha);

/// f^k for k >= 0 by repeated squaring; no constraint on f_0.
EgfSeries pow_integer(const EgfSeries& f, unsigned k);

/// Elementary series used by the family builders.
namespace elementary {

/// e^{c t}.
EgfSeries exp_scaled(int order, const Rational& c);
/// log(1 + t).
EgfSeries log1p(int order);
/// (1 + t)^{-1}.
EgfSeries inv_one_plus_t(int order);
/// (1 + t)^{c} = exp(c * log(1 + t)) for a polynomial exponent c.
EgfSeries one_plus_t_pow(int order, const BiPoly& exponent);

}  // namespace elementary

}  // namespace degen
