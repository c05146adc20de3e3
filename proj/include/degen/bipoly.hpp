#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "degen/rational.hpp"

namespace degen {

enum class Var { Lambda, X };

/// Replacement applied to one variable of a BiPoly.
///   Value:   var -> c
///   Scaled:  var -> c * var
///   Shifted: var -> var + c
struct Substitution {
  enum class Kind { Value, Scaled, Shifted };
  Kind kind = Kind::Value;
  Rational c;

  static Substitution value(Rational c) { return {Kind::Value, std::move(c)}; }
  static Substitution scaled(Rational c) { return {Kind::Scaled, std::move(c)}; }
  static Substitution shifted(Rational c) { return {Kind::Shifted, std::move(c)}; }
};

/// Polynomial in λ and x with rational coefficients.
///
/// Canonical form: terms sorted in graded-lexicographic order (total degree,
/// then λ-degree, both ascending) with no zero coefficients. Two BiPoly values
/// are equal iff their term lists are equal.
class BiPoly {
 public:
  struct Term {
    int dl = 0;  // degree in λ
    int dx = 0;  // degree in x
    Rational c;

    friend bool operator==(const Term&, const Term&) = default;
  };

  BiPoly() = default;
  BiPoly(Rational c);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  BiPoly(T c) : BiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static BiPoly lambda() { return monomial(1, 0, 1); }
  static BiPoly x() { return monomial(0, 1, 1); }
  static BiPoly monomial(int dl, int dx, Rational c);

  /// Builds a canonical polynomial from arbitrary terms (duplicates summed, zeros dropped).
  static BiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the polynomial has no λ or x dependence (including zero).
  bool is_constant() const;
  /// Coefficient of λ^dl x^dx.
  Rational coeff(int dl, int dx) const;
  Rational constant_term() const { return coeff(0, 0); }
  int degree_lambda() const;
  int degree_x() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
  friend BiPoly operator-(const BiPoly& a);

  BiPoly pow(unsigned exponent) const;

  BiPoly substitute(Var target, const Substitution& s) const;
  /// Replaces `target` by an arbitrary polynomial (Horner evaluation).
  BiPoly compose(Var target, const BiPoly& replacement) const;

  /// Exact division by λ^k. Throws NotDivisible if some term has λ-degree below k.
  BiPoly divide_by_lambda_power(int k) const;

  Rational evaluate(const Rational& lambda, const Rational& x) const;

  /// Plain-text rendering: λ prints as `l`, e.g. "x^2 - l*x", "1 - l", "0".
  std::string str() const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;
  friend std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.str(); }

 private:
  std::vector<Term> terms_;
};

/// Strict graded-lex order used for the canonical term layout.
bool graded_lex_less(int dl_a, int dx_a, int dl_b, int dx_b);

}  // namespace degen
