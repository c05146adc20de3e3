#include "degen/families.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "degen/errors.hpp"

namespace degen {

namespace {

using K = FamilyKind;

const std::vector<FamilyInfo> kCatalog = {
    {FamilyId::Exp, "exp", "x^n", "e^{xt}", K::Sequence, false, true, std::nullopt},
    {FamilyId::Log, "log", "L_n", "log(1+t)", K::Sequence, false, false, std::nullopt},
    {FamilyId::FallingFactorial, "falling-factorial", "(x)_n", "(1+t)^x = sum (x)_n t^n/n!", K::Sequence, false,
     true, std::nullopt},
    {FamilyId::BernoulliOrderR, "bernoulli", "B_n^(r)(x)", "(t/(e^t-1))^r e^{xt}", K::Sequence, true, true,
     std::nullopt},
    {FamilyId::Euler, "euler", "E_n(x)", "2/(e^t+1) e^{xt}", K::Sequence, false, true, std::nullopt},
    {FamilyId::Type2Bernoulli, "type2-bernoulli", "B*_n^(a)(x)", "(t/(e^t-e^{-t}))^a e^{xt}", K::Sequence, true,
     true, std::nullopt},
    {FamilyId::Type2Euler, "type2-euler", "E*_n(x)", "2/(e^t+e^{-t}) e^{xt}", K::Sequence, false, true,
     std::nullopt},
    {FamilyId::Daehee, "daehee", "D_n(x)", "log(1+t)/t (1+t)^x", K::Sequence, false, true, std::nullopt},
    {FamilyId::Bernoulli2ndKind, "bernoulli2", "b_n^(a)(x)", "(t/log(1+t))^a (1+t)^x", K::Sequence, true, true,
     std::nullopt},
    {FamilyId::Type2Bernoulli2ndKind, "type2-bernoulli2", "b*_n^(a)(x)", "(((1+t)-(1+t)^{-1})/log(1+t))^a (1+t)^x",
     K::Sequence, true, true, std::nullopt},
    {FamilyId::CentralFactorialPower, "central-factorial-power", "x^[n]", "x (x+n/2-1)(x+n/2-2)...(x-n/2+1)",
     K::Sequence, false, true, std::nullopt},
    {FamilyId::Stirling1, "stirling1", "S_1(n,k)", "log(1+t)^k/k!", K::Triangle, false, false, std::nullopt},
    {FamilyId::Stirling2, "stirling2", "S_2(n,k)", "(e^t-1)^k/k!", K::Triangle, false, false, std::nullopt},
    {FamilyId::CentralFactorialT, "central-factorial", "T(n,k)", "(e^{t/2}-e^{-t/2})^k/k!", K::Triangle, false,
     false, std::nullopt},
    {FamilyId::DegExp, "deg-exp", "(x)_{n,l}", "e_l^x(t) = (1+l t)^{x/l}", K::Sequence, false, true, FamilyId::Exp},
    {FamilyId::DegFallingFactorial, "deg-falling-factorial", "(x)_{n,l}", "x(x-l)...(x-(n-1)l)", K::Sequence, false,
     true, FamilyId::Exp},
    {FamilyId::DegLog, "deg-log", "L_{n,l}", "log_l(1+t) = ((1+t)^l-1)/l", K::Sequence, false, false, FamilyId::Log},
    {FamilyId::DegBernoulli, "deg-bernoulli", "beta_{n,l}(x)", "t/(e_l(t)-1) e_l^x(t)", K::Sequence, false, true,
     FamilyId::BernoulliOrderR},
    {FamilyId::DegEuler, "deg-euler", "E_{n,l}(x)", "2/(e_l(t)+1) e_l^x(t)", K::Sequence, false, true,
     FamilyId::Euler},
    {FamilyId::DegDaehee, "deg-daehee", "D_{n,l}(x)", "log_l(1+t)/t (1+t)^x", K::Sequence, false, true,
     FamilyId::Daehee},
    {FamilyId::DegBernoulli2ndKind, "deg-bernoulli2", "b_{n,l}^(a)(x)", "(t/log_l(1+t))^a (1+t)^x", K::Sequence,
     true, true, FamilyId::Bernoulli2ndKind},
    {FamilyId::Type2DegBernoulli2ndKind, "type2-deg-bernoulli2", "b*_{n,l}^(a)(x)",
     "(((1+t)-(1+t)^{-1})/log_l(1+t))^a (1+t)^x", K::Sequence, true, true, FamilyId::Type2Bernoulli2ndKind},
    {FamilyId::Type2DegBernoulli, "type2-deg-bernoulli", "beta*_{n,l}^(a)(x)",
     "(t/(e_l(t)-e_l^{-1}(t)))^a e_l^x(t)", K::Sequence, true, true, FamilyId::Type2Bernoulli},
    {FamilyId::DegStirling1, "deg-stirling1", "S_{1,l}(n,k)", "log_l(1+t)^k/k!", K::Triangle, false, false,
     FamilyId::Stirling1},
    {FamilyId::DegStirling2, "deg-stirling2", "S_{2,l}(n,k)", "(e_l(t)-1)^k/k!", K::Triangle, false, false,
     FamilyId::Stirling2},
    {FamilyId::DegCentralFactorial, "deg-central-factorial", "T_l(n,k)", "(e_l^{1/2}(t)-e_l^{-1/2}(t))^k/k!",
     K::Triangle, false, false, FamilyId::CentralFactorialT},
};

EgfSeries one(int order) { return EgfSeries::constant(BiPoly(1), order); }

// c^alpha * (f/c)^alpha for a series whose constant term c is a nonzero rational.
EgfSeries pow_normalized(const EgfSeries& f, const Rational& alpha) {
  const BiPoly& f0 = f.coeff(0);
  if (f0.is_zero() || !f0.is_constant()) {
    throw BadConstantTerm("kernel constant term " + f0.str() + " is not a nonzero rational");
  }
  Rational c = f0.constant_term();
  auto scale = c.pow_exact(alpha);
  if (!scale) {
    throw UnsupportedOrder(c.str() + "^(" + alpha.str() + ") is not rational");
  }
  return pow_rational(f * BiPoly(c.inverse()), alpha) * BiPoly(*scale);
}

// e^{a t} for a polynomial a.
EgfSeries exp_of(int order, const BiPoly& a) { return series_exp(EgfSeries::t(order) * a); }

// Kernels below are returned at `order` after the division by t.
EgfSeries log_over_t(int order, bool degenerate) {
  return shift_div_t(degenerate ? kernels::deg_log(order + 1) : elementary::log1p(order + 1), 1);
}

// ((1+t) - (1+t)^{-1}) / t
EgfSeries type2_numerator_over_t(int order) {
  EgfSeries num = EgfSeries::generate(order + 1, [](int n) { return BiPoly(n <= 1 ? 1 : 0); });
  num -= elementary::inv_one_plus_t(order + 1);
  return shift_div_t(num, 1);
}

// (e^t - 1)/t or (e_l(t) - 1)/t
EgfSeries exp_minus_one_over_t(int order, bool degenerate) {
  EgfSeries e = degenerate ? kernels::deg_exp(order + 1, BiPoly(1)) : elementary::exp_scaled(order + 1, 1);
  return shift_div_t(e - one(order + 1), 1);
}

// (e^t - e^{-t})/t or (e_l(t) - e_l^{-1}(t))/t
EgfSeries sym_exp_diff_over_t(int order, bool degenerate) {
  EgfSeries diff = degenerate
                       ? kernels::deg_exp(order + 1, BiPoly(1)) - kernels::deg_exp(order + 1, BiPoly(-1))
                       : elementary::exp_scaled(order + 1, 1) - elementary::exp_scaled(order + 1, -1);
  return shift_div_t(diff, 1);
}

EgfSeries triangle_kernel(FamilyId id, int order) {
  switch (id) {
    case FamilyId::Stirling1:
      return elementary::log1p(order);
    case FamilyId::Stirling2:
      return elementary::exp_scaled(order, 1) - one(order);
    case FamilyId::CentralFactorialT:
      return elementary::exp_scaled(order, Rational(1, 2)) - elementary::exp_scaled(order, Rational(-1, 2));
    case FamilyId::DegStirling1:
      return kernels::deg_log(order);
    case FamilyId::DegStirling2:
      return kernels::deg_exp(order, BiPoly(1)) - one(order);
    case FamilyId::DegCentralFactorial:
      return kernels::deg_exp(order, BiPoly(Rational(1, 2))) - kernels::deg_exp(order, BiPoly(Rational(-1, 2)));
    default:
      throw UnknownFamily(std::string(family_info(id).name) + " is not a number triangle");
  }
}

long checked_column(const FamilySpec& spec) {
  if (!spec.order.is_integer() || spec.order.sign() < 0) {
    throw UnsupportedOrder("triangle column must be a nonnegative integer, got " + spec.order.str());
  }
  return spec.order.to_long();
}

EgfSeries build_sequence(const FamilySpec& spec, int order) {
  const BiPoly a = spec.argument.as_poly();
  const Rational& alpha = spec.order;
  switch (spec.id) {
    case FamilyId::Exp:
      return exp_of(order, a);
    case FamilyId::Log:
      return elementary::log1p(order);
    case FamilyId::FallingFactorial:
      return EgfSeries::generate(order, [&a](int n) {
        return falling_factorial(n, FactorialMode::Classical, a) * factorial(n).inverse();
      });
    case FamilyId::BernoulliOrderR:
      return pow_rational(exp_minus_one_over_t(order, false), -alpha) * exp_of(order, a);
    case FamilyId::Euler:
      return series_div(EgfSeries::constant(BiPoly(2), order),
                        elementary::exp_scaled(order, 1) + one(order)) *
             exp_of(order, a);
    case FamilyId::Type2Bernoulli:
      return pow_normalized(sym_exp_diff_over_t(order, false), -alpha) * exp_of(order, a);
    case FamilyId::Type2Euler:
      return series_div(EgfSeries::constant(BiPoly(2), order),
                        elementary::exp_scaled(order, 1) + elementary::exp_scaled(order, -1)) *
             exp_of(order, a);
    case FamilyId::Daehee:
      return log_over_t(order, false) * elementary::one_plus_t_pow(order, a);
    case FamilyId::Bernoulli2ndKind:
      return pow_rational(log_over_t(order, false), -alpha) * elementary::one_plus_t_pow(order, a);
    case FamilyId::Type2Bernoulli2ndKind:
      return pow_normalized(series_div(type2_numerator_over_t(order), log_over_t(order, false)), alpha) *
             elementary::one_plus_t_pow(order, a);
    case FamilyId::CentralFactorialPower:
      return EgfSeries::generate(order, [&a](int n) {
        return central_factorial_power(n).compose(Var::X, a) * factorial(n).inverse();
      });
    case FamilyId::DegExp:
      return kernels::deg_exp(order, a);
    case FamilyId::DegFallingFactorial:
      return EgfSeries::generate(order, [&a](int n) {
        return falling_factorial(n, FactorialMode::Degenerate, a) * factorial(n).inverse();
      });
    case FamilyId::DegLog:
      return kernels::deg_log(order);
    case FamilyId::DegBernoulli:
      return series_div(one(order), exp_minus_one_over_t(order, true)) * kernels::deg_exp(order, a);
    case FamilyId::DegEuler:
      return series_div(EgfSeries::constant(BiPoly(2), order), kernels::deg_exp(order, BiPoly(1)) + one(order)) *
             kernels::deg_exp(order, a);
    case FamilyId::DegDaehee:
      return log_over_t(order, true) * elementary::one_plus_t_pow(order, a);
    case FamilyId::DegBernoulli2ndKind:
      return pow_rational(log_over_t(order, true), -alpha) * elementary::one_plus_t_pow(order, a);
    case FamilyId::Type2DegBernoulli2ndKind:
      return pow_normalized(series_div(type2_numerator_over_t(order), log_over_t(order, true)), alpha) *
             elementary::one_plus_t_pow(order, a);
    case FamilyId::Type2DegBernoulli:
      return pow_normalized(sym_exp_diff_over_t(order, true), -alpha) * kernels::deg_exp(order, a);
    default:
      break;
  }
  throw UnknownFamily(std::string(family_info(spec.id).name) + " is not a sequence family");
}

class TriangleCache {
 public:
  BiPoly get(FamilyId id, int n, int k, const LambdaMode& lambda) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& table = tables_[Key{id, lambda.kind, lambda.c.str()}];
    if (static_cast<int>(table.size()) <= n) table = build(id, std::max(n, 16), lambda);
    return table[n][k];
  }

 private:
  using Key = std::tuple<FamilyId, LambdaMode::Kind, std::string>;
  using Table = std::vector<std::vector<BiPoly>>;

  static Table build(FamilyId id, int n_max, const LambdaMode& lambda) {
    EgfSeries kernel = triangle_kernel(id, n_max);
    Table table(n_max + 1);
    for (int n = 0; n <= n_max; ++n) table[n].resize(n + 1);
    EgfSeries power = one(n_max);
    for (int k = 0; k <= n_max; ++k) {
      Rational inv_k_fact = factorial(k).inverse();
      for (int n = k; n <= n_max; ++n) {
        table[n][k] = lambda.apply(power.coeff(n) * (factorial(n) * inv_k_fact));
      }
      if (k < n_max) power *= kernel;
    }
    return table;
  }

  std::mutex mutex_;
  std::map<Key, Table> tables_;
};

TriangleCache& triangle_cache() {
  static TriangleCache cache;
  return cache;
}

}  // namespace

const std::vector<FamilyInfo>& family_catalog() { return kCatalog; }

const FamilyInfo& family_info(FamilyId id) {
  for (const auto& info : kCatalog) {
    if (info.id == id) return info;
  }
  throw UnknownFamily("family id " + std::to_string(static_cast<int>(id)));
}

FamilyId family_from_name(std::string_view name) {
  for (const auto& info : kCatalog) {
    if (info.name == name) return info.id;
  }
  throw UnknownFamily("no family named '" + std::string(name) + "'");
}

BiPoly Argument::as_poly() const {
  switch (kind) {
    case Kind::Symbolic:
      return BiPoly::x();
    case Kind::Numeric:
      return BiPoly(c);
    case Kind::Shifted:
      return BiPoly::x() + BiPoly(c);
  }
  return BiPoly::x();
}

std::string Argument::str() const {
  switch (kind) {
    case Kind::Symbolic:
      return "x";
    case Kind::Numeric:
      return c.str();
    case Kind::Shifted:
      return c.sign() < 0 ? "x-" + c.abs().str() : "x+" + c.str();
  }
  return "x";
}

BiPoly LambdaMode::apply(const BiPoly& p) const {
  switch (kind) {
    case Kind::Symbolic:
      return p;
    case Kind::Numeric:
      return p.substitute(Var::Lambda, Substitution::value(c));
    case Kind::Scaled:
      return p.substitute(Var::Lambda, Substitution::scaled(c));
  }
  return p;
}

std::string LambdaMode::str() const {
  switch (kind) {
    case Kind::Symbolic:
      return "l";
    case Kind::Numeric:
      return c.str();
    case Kind::Scaled:
      return c.str() + "*l";
  }
  return "l";
}

EgfSeries build_egf(const FamilySpec& spec, int n_max) {
  if (n_max < 0) throw DomainError("negative truncation order");
  const FamilyInfo& info = family_info(spec.id);
  if (info.kind == FamilyKind::Triangle) {
    long k = checked_column(spec);
    EgfSeries s = pow_integer(triangle_kernel(spec.id, n_max), static_cast<unsigned>(k)) *
                  BiPoly(factorial(k).inverse());
    return s.map([&spec](const BiPoly& p) { return spec.lambda.apply(p); });
  }
  if (!info.takes_order && !spec.order.is_one()) {
    throw UnsupportedOrder(std::string(info.name) + " takes no order, got " + spec.order.str());
  }
  EgfSeries s = build_sequence(spec, n_max);
  if (spec.lambda.kind == LambdaMode::Kind::Symbolic) return s;
  return s.map([&spec](const BiPoly& p) { return spec.lambda.apply(p); });
}

BiPoly family_value(const FamilySpec& spec, int n) {
  if (n < 0) throw DomainError("negative index");
  if (family_info(spec.id).kind == FamilyKind::Triangle) {
    return triangular_number(spec.id, n, static_cast<int>(checked_column(spec)), spec.lambda);
  }
  return build_egf(spec, n).value(n);
}

BiPoly triangular_number(FamilyId id, int n, int k, const LambdaMode& lambda) {
  if (family_info(id).kind != FamilyKind::Triangle) {
    throw UnknownFamily(std::string(family_info(id).name) + " is not a number triangle");
  }
  if (n < 0 || k < 0 || k > n) return {};
  return triangle_cache().get(id, n, k, lambda);
}

BiPoly falling_factorial(int n, FactorialMode mode, const BiPoly& argument) {
  if (n < 0) throw DomainError("negative falling factorial length");
  BiPoly step = mode == FactorialMode::Classical ? BiPoly(1) : BiPoly::lambda();
  BiPoly result(1);
  for (int j = 0; j < n; ++j) result *= argument - step * Rational(j);
  return result;
}

BiPoly central_factorial_power(int n) {
  if (n < 0) throw DomainError("negative central factorial length");
  if (n == 0) return BiPoly(1);
  BiPoly result = BiPoly::x();
  for (int j = 1; j <= n - 1; ++j) result *= BiPoly::x() + BiPoly(Rational(n, 2) - j);
  return result;
}

BiPoly classical_value(FamilyId id, int n, const Argument& x, const Rational& order) {
  const FamilyInfo& info = family_info(id);
  if (info.classical) throw UnknownFamily(std::string(info.name) + " is a degenerate family");
  return family_value(FamilySpec{id, order, x, LambdaMode::symbolic()}, n);
}

namespace kernels {

EgfSeries deg_exp(int order, const BiPoly& exponent) {
  // a_n = (a)_{n,λ}/n!, accumulated as a_n = a_{n-1} (a - (n-1)λ)/n
  BiPoly running(1);
  std::vector<BiPoly> coeffs;
  coeffs.reserve(order + 1);
  coeffs.push_back(running);
  for (int n = 1; n <= order; ++n) {
    running = running * (exponent - BiPoly::lambda() * Rational(n - 1)) * Rational(1, n);
    coeffs.push_back(running);
  }
  return EgfSeries(std::move(coeffs));
}

EgfSeries deg_log(int order) {
  // c_0 = 0, c_n = prod_{j=1}^{n-1} (λ - j) / n!
  std::vector<BiPoly> coeffs(order + 1);
  BiPoly product(1);
  for (int n = 1; n <= order; ++n) {
    if (n >= 2) product *= BiPoly::lambda() - BiPoly(n - 1);
    coeffs[n] = product * factorial(n).inverse();
  }
  return EgfSeries(std::move(coeffs));
}

}  // namespace kernels

}  // namespace degen
