#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degen/bipoly.hpp"
#include "degen/rational.hpp"
#include "degen/series.hpp"

namespace degen {

enum class FamilyId {
  // Classical families.
  Exp,                   // e^{xt}
  Log,                   // log(1+t)
  FallingFactorial,      // (x)_n
  BernoulliOrderR,       // B_n^{(r)}(x)
  Euler,                 // E_n(x)
  Type2Bernoulli,        // B*_n^{(a)}(x)
  Type2Euler,            // E*_n(x)
  Daehee,                // D_n(x)
  Bernoulli2ndKind,      // b_n^{(r)}(x)
  Type2Bernoulli2ndKind, // b*_n^{(a)}(x)
  CentralFactorialPower, // x^{[n]}
  Stirling1,             // S_1(n,k)
  Stirling2,             // S_2(n,k)
  CentralFactorialT,     // T(n,k)
  // Degenerate families.
  DegExp,                   // e_l^x(t)
  DegFallingFactorial,      // (x)_{n,l}
  DegLog,                   // log_l(1+t)
  DegBernoulli,             // beta_{n,l}(x)
  DegEuler,                 // E_{n,l}(x)
  DegDaehee,                // D_{n,l}(x)
  DegBernoulli2ndKind,      // b_{n,l}^{(a)}(x)
  Type2DegBernoulli2ndKind, // b*_{n,l}^{(a)}(x)
  Type2DegBernoulli,        // beta*_{n,l}^{(a)}(x)
  DegStirling1,             // S_{1,l}(n,k)
  DegStirling2,             // S_{2,l}(n,k)
  DegCentralFactorial,      // T_l(n,k)
};

enum class FamilyKind {
  Sequence,  // one polynomial per n
  Triangle,  // one number per (n, k), column k selected by the order
};

struct FamilyInfo {
  FamilyId id;
  std::string_view name;  // kebab-case CLI alias
  std::string_view symbol;
  std::string_view generating_function;
  FamilyKind kind;
  bool takes_order;  // kernel raised to a rational order
  bool uses_x;
  std::optional<FamilyId> classical;  // λ -> 0 counterpart of a degenerate family
};

const std::vector<FamilyInfo>& family_catalog();
const FamilyInfo& family_info(FamilyId id);
/// Throws UnknownFamily.
FamilyId family_from_name(std::string_view name);

/// Argument substituted for x: symbolic x, a rational number, or x + c.
struct Argument {
  enum class Kind { Symbolic, Numeric, Shifted };
  Kind kind = Kind::Symbolic;
  Rational c;

  static Argument symbolic() { return {}; }
  static Argument numeric(Rational c) { return {Kind::Numeric, std::move(c)}; }
  static Argument shifted(Rational c) { return {Kind::Shifted, std::move(c)}; }

  BiPoly as_poly() const;
  std::string str() const;
  friend bool operator==(const Argument&, const Argument&) = default;
};

/// Treatment of λ: symbolic, a rational number, or λ -> c·λ.
struct LambdaMode {
  enum class Kind { Symbolic, Numeric, Scaled };
  Kind kind = Kind::Symbolic;
  Rational c;

  static LambdaMode symbolic() { return {}; }
  static LambdaMode numeric(Rational c) { return {Kind::Numeric, std::move(c)}; }
  static LambdaMode scaled(Rational c) { return {Kind::Scaled, std::move(c)}; }

  BiPoly apply(const BiPoly& p) const;
  std::string str() const;
  friend bool operator==(const LambdaMode&, const LambdaMode&) = default;
};

struct FamilySpec {
  FamilyId id;
  Rational order{1};  // α, r, or the triangle column k
  Argument argument{};
  LambdaMode lambda{};
};

/// Generating function of `spec` truncated at order n_max; the n-th value is
/// the family member. Coefficients stay polynomial in λ.
EgfSeries build_egf(const FamilySpec& spec, int n_max);

/// Value n of a sequence family, or entry (n, order) of a triangle family.
BiPoly family_value(const FamilySpec& spec, int n);

/// Entry (n, k) of a number triangle; zero outside 0 <= k <= n. Tables are
/// memoized per (family, λ mode) and safe to share between threads.
BiPoly triangular_number(FamilyId id, int n, int k, const LambdaMode& lambda = LambdaMode::symbolic());

enum class FactorialMode { Classical, Degenerate };

/// (a)_n = a(a-1)...(a-n+1) or (a)_{n,λ} = a(a-λ)...(a-(n-1)λ); 1 for n = 0.
BiPoly falling_factorial(int n, FactorialMode mode, const BiPoly& argument);

/// x^{[n]} = x (x + n/2 - 1)(x + n/2 - 2)...(x - n/2 + 1); x^{[0]} = 1.
BiPoly central_factorial_power(int n);

/// Value of a classical (non-degenerate) family.
BiPoly classical_value(FamilyId id, int n, const Argument& x = Argument::symbolic(), const Rational& order = 1);

/// Kernels shared with the identity suite.
namespace kernels {

/// e_λ^{a}(t) = (1 + λt)^{a/λ} for a polynomial exponent a.
EgfSeries deg_exp(int order, const BiPoly& exponent);
/// log_λ(1+t) from its closed coefficient formula.
EgfSeries deg_log(int order);

}  // namespace kernels

}  // namespace degen
