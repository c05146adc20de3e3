#include "degen/identities.hpp"

#include <chrono>
#include <functional>

#include "degen/errors.hpp"
#include "degen/families.hpp"
#include "degen/series.hpp"

namespace degen {

namespace {

const std::vector<IdentityInfo> kIdentities = {
    {IdentityId::Eq2, "eq2", "B*_n(x) = 2^{n-1} B_n((x+1)/2)"},
    {IdentityId::Eq4, "eq4", "E*_n(x) = 2^n E_n((x+1)/2)"},
    {IdentityId::Eq5Recon, "eq5-recon", "x^n = sum_{k=0}^{n} T(n,k) x^[k]"},
    {IdentityId::Eq18Equiv, "eq18-equiv",
     "(t/log_l(1+t))^a (1+t)^x = (l t/((1+t)^{l/2}-(1+t)^{-l/2}))^a (1+t)^{x-l a/2}"},
    {IdentityId::Eq21, "eq21",
     "sum_m b_{m,l}^(r)(x) S_2(n,m) = sum_m binom(n,m) B*_{n-m}(2x/l-r) l^{n-m} S_2(m+r,r)/binom(m+r,r) "
     "2^{m+r-n}"},
    {IdentityId::Eq23, "eq23", "b*_{n,l}(x) = b_{n,l}^(1)(x) + b_{n,l}^(1)(x-1)"},
    {IdentityId::Eq25, "eq25", "b*_{n,l}(x) = sum_l binom(n,l) b*_{l,l} (x)_{n-l}"},
    {IdentityId::Thm2, "thm2",
     "sum_l b*_{l,l}^(k)(x) S_{2,l}(n,l) = sum_l binom(n,l) 2^{l+k}/binom(l+k,k) S_{2,l/2}(l+k,k) (x-k)_{n-l,l}"},
    {IdentityId::Thm2Corollary, "thm2-corollary",
     "2^{n+k} S_{2,l/2}(n+k,k) = binom(n+k,k) sum_l b*_{l,l}^(k)(k) S_{2,l}(n,l)"},
    {IdentityId::Thm3, "thm3", "b*_{n,l}^(k)(x) = sum_l beta*_{l,l}^(-k)(x) S_{1,l}(n,l)"},
    {IdentityId::Thm4, "thm4",
     "sum_m sum_l T_l(l,k) S_{1,l}(m,l) binom(n,m) (k/2)_{n-m} = sum_m S_{1,l}(m,k) b_{n-m,l}^(k) binom(n,m)"},
    {IdentityId::BSecondKindRelation, "b-second-kind-relation", "b_n^(r)(x) = B_n^(n-r+1)(x+1)"},
    {IdentityId::LimitsLambda0, "limits-lambda0", "each degenerate family at l = 0 equals its classical counterpart"},
    {IdentityId::StirlingInversion, "stirling-inversion", "sum_l S_{2,l}(n,l) S_{1,l}(l,m) = delta_{n,m}"},
    {IdentityId::CompositionalInverse, "compositional-inverse",
     "e_l(log_l(1+t)) = 1+t and log_l(1 + (e_l(t)-1)) = t"},
};

using Values = std::vector<BiPoly>;

Values values_of(const FamilySpec& spec, int trunc) { return build_egf(spec, trunc).values(); }

Rational two_pow(long e) { return Rational(2).pow(e); }

class CaseSink {
 public:
  explicit CaseSink(VerificationReport& report) : report_(report) {}

  void add(std::vector<CaseIndex> indices, const BiPoly& lhs, const BiPoly& rhs) {
    BiPoly residual = lhs - rhs;
    bool passed = residual.is_zero();
    report_.cases.push_back({std::move(indices), passed, std::move(residual)});
  }

 private:
  VerificationReport& report_;
};

CaseIndex idx(std::string key, long v) { return {std::move(key), v}; }
CaseIndex idx(std::string key, std::string v) { return {std::move(key), std::move(v)}; }

FamilySpec spec_of(FamilyId id, Rational order = 1, Argument arg = Argument::symbolic()) {
  return FamilySpec{id, std::move(order), std::move(arg), LambdaMode::symbolic()};
}

// x -> (x+1)/2
BiPoly half_shift(const BiPoly& p) {
  return p.compose(Var::X, (BiPoly::x() + BiPoly(1)) * Rational(1, 2));
}

void verify_eq2(int max_n, int trunc, CaseSink& sink) {
  Values type2 = values_of(spec_of(FamilyId::Type2Bernoulli), trunc);
  Values bern = values_of(spec_of(FamilyId::BernoulliOrderR), trunc);
  for (int n = 0; n <= max_n; ++n) {
    sink.add({idx("n", n)}, type2[n], half_shift(bern[n]) * two_pow(n - 1));
  }
}

void verify_eq4(int max_n, int trunc, CaseSink& sink) {
  Values type2 = values_of(spec_of(FamilyId::Type2Euler), trunc);
  Values euler = values_of(spec_of(FamilyId::Euler), trunc);
  for (int n = 0; n <= max_n; ++n) {
    sink.add({idx("n", n)}, type2[n], half_shift(euler[n]) * two_pow(n));
  }
}

void verify_eq5(int max_n, CaseSink& sink) {
  for (int n = 0; n <= max_n; ++n) {
    BiPoly sum;
    for (int k = 0; k <= n; ++k) sum += triangular_number(FamilyId::CentralFactorialT, n, k) * central_factorial_power(k);
    sink.add({idx("n", n)}, BiPoly::x().pow(n), sum);
  }
}

// (λt / ((1+t)^{λ/2} - (1+t)^{-λ/2}))^a (1+t)^{x - λa/2}
EgfSeries eq18_form(int trunc, const Rational& alpha) {
  BiPoly half_lambda = BiPoly::lambda() * Rational(1, 2);
  EgfSeries diff = elementary::one_plus_t_pow(trunc + 1, half_lambda) -
                   elementary::one_plus_t_pow(trunc + 1, -half_lambda);
  // Every coefficient of the difference carries a factor λ; (diff / t) / λ has constant term 1.
  EgfSeries normalized = shift_div_t(diff, 1).map([](const BiPoly& p) { return p.divide_by_lambda_power(1); });
  EgfSeries kernel = pow_rational(normalized, -alpha);
  return kernel * elementary::one_plus_t_pow(trunc, BiPoly::x() - half_lambda * alpha);
}

std::vector<Rational> eq18_orders(int max_order) {
  std::vector<Rational> orders = {Rational(1, 2)};
  for (int a = 1; a <= std::max(2, max_order); ++a) orders.emplace_back(a);
  return orders;
}

void verify_eq18(int max_n, int max_order, int trunc, CaseSink& sink) {
  for (const Rational& alpha : eq18_orders(max_order)) {
    Values direct = values_of(spec_of(FamilyId::DegBernoulli2ndKind, alpha), trunc);
    Values other = eq18_form(trunc, alpha).values();
    for (int n = 0; n <= max_n; ++n) {
      sink.add({idx("alpha", alpha.str()), idx("n", n)}, direct[n], other[n]);
    }
  }
}

void verify_eq21(int max_n, int max_order, int trunc, CaseSink& sink) {
  for (int r = 1; r <= max_order; ++r) {
    Values b = values_of(spec_of(FamilyId::DegBernoulli2ndKind, r), trunc);
    for (int n = 0; n <= max_n; ++n) {
      BiPoly lhs;
      BiPoly rhs;
      for (int m = 0; m <= n; ++m) {
        lhs += b[m] * triangular_number(FamilyId::Stirling2, n, m);
        Rational scale = binomial(n, m) * triangular_number(FamilyId::Stirling2, m + r, r).constant_term() /
                         binomial(m + r, r) * two_pow(m + r - n);
        rhs += eq21_rhs_term(n, m, r) * scale;
      }
      sink.add({idx("n", n), idx("r", r)}, lhs, rhs);
    }
  }
}

void verify_eq23(int max_n, int trunc, CaseSink& sink) {
  Values type2 = values_of(spec_of(FamilyId::Type2DegBernoulli2ndKind), trunc);
  Values at_x = values_of(spec_of(FamilyId::DegBernoulli2ndKind, 1), trunc);
  Values at_x_minus_1 = values_of(spec_of(FamilyId::DegBernoulli2ndKind, 1, Argument::shifted(-1)), trunc);
  for (int n = 0; n <= max_n; ++n) {
    sink.add({idx("n", n)}, type2[n], at_x[n] + at_x_minus_1[n]);
  }
}

void verify_eq25(int max_n, int trunc, CaseSink& sink) {
  Values poly = values_of(spec_of(FamilyId::Type2DegBernoulli2ndKind), trunc);
  Values numbers = values_of(spec_of(FamilyId::Type2DegBernoulli2ndKind, 1, Argument::numeric(0)), trunc);
  for (int n = 0; n <= max_n; ++n) {
    BiPoly rhs;
    for (int l = 0; l <= n; ++l) {
      rhs += numbers[l] * falling_factorial(n - l, FactorialMode::Classical, BiPoly::x()) * binomial(n, l);
    }
    sink.add({idx("n", n)}, poly[n], rhs);
  }
}

void verify_thm2(int max_n, int max_order, int trunc, CaseSink& sink) {
  const LambdaMode half = LambdaMode::scaled(Rational(1, 2));
  for (int k = 1; k <= max_order; ++k) {
    Values b = values_of(spec_of(FamilyId::Type2DegBernoulli2ndKind, k), trunc);
    BiPoly shifted_x = BiPoly::x() - BiPoly(k);
    for (int n = 0; n <= max_n; ++n) {
      BiPoly lhs;
      BiPoly rhs;
      for (int l = 0; l <= n; ++l) {
        lhs += b[l] * triangular_number(FamilyId::DegStirling2, n, l);
        Rational scale = binomial(n, l) * two_pow(l + k) / binomial(l + k, k);
        rhs += triangular_number(FamilyId::DegStirling2, l + k, k, half) *
               falling_factorial(n - l, FactorialMode::Degenerate, shifted_x) * scale;
      }
      sink.add({idx("n", n), idx("k", k)}, lhs, rhs);
    }
  }
}

void verify_thm2_corollary(int max_n, int max_order, int trunc, CaseSink& sink) {
  const LambdaMode half = LambdaMode::scaled(Rational(1, 2));
  for (int k = 1; k <= max_order; ++k) {
    Values b = values_of(spec_of(FamilyId::Type2DegBernoulli2ndKind, k, Argument::numeric(k)), trunc);
    for (int n = 0; n <= max_n; ++n) {
      BiPoly sum;
      for (int l = 0; l <= n; ++l) sum += b[l] * triangular_number(FamilyId::DegStirling2, n, l);
      BiPoly lhs = triangular_number(FamilyId::DegStirling2, n + k, k, half) * two_pow(n + k);
      sink.add({idx("n", n), idx("k", k)}, lhs, sum * binomial(n + k, k));
    }
  }
}

void verify_thm3(int max_n, int max_order, int trunc, CaseSink& sink) {
  for (int k = 1; k <= max_order; ++k) {
    Values b = values_of(spec_of(FamilyId::Type2DegBernoulli2ndKind, k), trunc);
    Values beta = values_of(spec_of(FamilyId::Type2DegBernoulli, -k), trunc);
    for (int n = 0; n <= max_n; ++n) {
      BiPoly rhs;
      for (int l = 0; l <= n; ++l) rhs += beta[l] * triangular_number(FamilyId::DegStirling1, n, l);
      sink.add({idx("n", n), idx("k", k)}, b[n], rhs);
    }
  }
}

void verify_thm4(int max_n, int max_order, int trunc, CaseSink& sink) {
  for (int k = 0; k <= max_order; ++k) {
    Values b = values_of(spec_of(FamilyId::DegBernoulli2ndKind, k, Argument::numeric(0)), trunc);
    BiPoly half_k(Rational(k, 2));
    for (int n = k; n <= max_n; ++n) {
      BiPoly lhs;
      BiPoly rhs;
      for (int m = k; m <= n; ++m) {
        BiPoly inner;
        for (int l = k; l <= m; ++l) {
          inner += triangular_number(FamilyId::DegCentralFactorial, l, k) *
                   triangular_number(FamilyId::DegStirling1, m, l);
        }
        lhs += inner * falling_factorial(n - m, FactorialMode::Classical, half_k) * binomial(n, m);
        rhs += triangular_number(FamilyId::DegStirling1, m, k) * b[n - m] * binomial(n, m);
      }
      sink.add({idx("n", n), idx("k", k)}, lhs, rhs);
    }
  }
}

void verify_b_second_kind(int max_n, int max_order, int trunc, CaseSink& sink) {
  for (int r = 1; r <= max_order; ++r) {
    Values b = values_of(spec_of(FamilyId::Bernoulli2ndKind, r), trunc);
    for (int n = 0; n <= max_n; ++n) {
      BiPoly rhs = family_value(spec_of(FamilyId::BernoulliOrderR, n - r + 1, Argument::shifted(1)), n);
      sink.add({idx("n", n), idx("r", r)}, b[n], rhs);
    }
  }
}

void verify_limits(int max_n, int max_order, int trunc, CaseSink& sink) {
  const LambdaMode zero = LambdaMode::numeric(0);
  for (const FamilyInfo& info : family_catalog()) {
    if (!info.classical) continue;
    std::string name(info.name);
    if (info.kind == FamilyKind::Triangle) {
      for (int n = 0; n <= max_n; ++n) {
        for (int k = 0; k <= n; ++k) {
          sink.add({idx("family", name), idx("n", n), idx("k", k)}, triangular_number(info.id, n, k, zero),
                   triangular_number(*info.classical, n, k));
        }
      }
      continue;
    }
    int top_order = info.takes_order ? max_order : 1;
    for (int a = 1; a <= top_order; ++a) {
      FamilySpec degenerate = spec_of(info.id, a);
      degenerate.lambda = zero;
      Values at_zero = values_of(degenerate, trunc);
      Values classical = values_of(spec_of(*info.classical, a), trunc);
      for (int n = 0; n <= max_n; ++n) {
        std::vector<CaseIndex> indices = {idx("family", name)};
        if (info.takes_order) indices.push_back(idx("order", a));
        indices.push_back(idx("n", n));
        sink.add(std::move(indices), at_zero[n], classical[n]);
      }
    }
  }
}

void verify_stirling_inversion(int max_n, CaseSink& sink) {
  for (int n = 0; n <= max_n; ++n) {
    for (int m = 0; m <= max_n; ++m) {
      BiPoly sum;
      for (int l = std::min(n, m); l <= std::max(n, m); ++l) {
        sum += triangular_number(FamilyId::DegStirling2, n, l) * triangular_number(FamilyId::DegStirling1, l, m);
      }
      sink.add({idx("n", n), idx("m", m)}, sum, BiPoly(n == m ? 1 : 0));
    }
  }
}

void verify_compositional_inverse(int max_n, int trunc, CaseSink& sink) {
  EgfSeries deg_exp = build_egf(spec_of(FamilyId::DegExp, 1, Argument::numeric(1)), trunc);
  EgfSeries deg_log = build_egf(spec_of(FamilyId::DegLog), trunc);
  EgfSeries one = EgfSeries::constant(BiPoly(1), trunc);

  EgfSeries exp_of_log = compose(deg_exp, deg_log);
  EgfSeries one_plus_t = one + EgfSeries::t(trunc);
  for (int n = 0; n <= max_n; ++n) {
    sink.add({idx("direction", "exp-of-log"), idx("n", n)}, exp_of_log.coeff(n), one_plus_t.coeff(n));
  }
  EgfSeries log_of_exp = compose(deg_log, deg_exp - one);
  EgfSeries t = EgfSeries::t(trunc);
  for (int n = 0; n <= max_n; ++n) {
    sink.add({idx("direction", "log-of-exp"), idx("n", n)}, log_of_exp.coeff(n), t.coeff(n));
  }
}

}  // namespace

const std::vector<IdentityInfo>& identity_catalog() { return kIdentities; }

const IdentityInfo& identity_info(IdentityId id) {
  for (const auto& info : kIdentities) {
    if (info.id == id) return info;
  }
  throw UnknownIdentity("identity id " + std::to_string(static_cast<int>(id)));
}

IdentityId identity_from_name(std::string_view name) {
  if (name == "thm1") return IdentityId::Eq23;
  if (name == "thm1-moreover") return IdentityId::Eq21;
  for (const auto& info : kIdentities) {
    if (info.name == name) return info.id;
  }
  throw UnknownIdentity("no identity named '" + std::string(name) + "'");
}

bool VerificationReport::all_passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t count = 0;
  for (const auto& c : cases) count += c.passed ? 0 : 1;
  return count;
}

ProfileRanges profile_ranges(Profile profile) {
  if (profile == Profile::Quick) return {8, 3, 12, 3};
  return {12, 4, 16, 6};
}

std::string_view profile_name(Profile profile) { return profile == Profile::Quick ? "quick" : "full"; }

Profile profile_from_name(std::string_view name) {
  if (name == "quick") return Profile::Quick;
  if (name == "full") return Profile::Full;
  throw RangeError("unknown profile '" + std::string(name) + "'");
}

BiPoly eq21_rhs_term(int n, int m, int r, const Rational& type2_order) {
  if (m < 0 || m > n) throw RangeError("eq21 term needs 0 <= m <= n");
  if (r < 1) throw RangeError("eq21 term needs r >= 1");
  int j = n - m;
  BiPoly type2 = family_value(spec_of(FamilyId::Type2Bernoulli, type2_order), j);
  BiPoly y = BiPoly::x() * Rational(2) - BiPoly::lambda() * Rational(r);
  BiPoly result;
  for (const auto& term : type2.terms()) {
    // B*_j has no λ; each x^i becomes (2x - rλ)^i λ^{j-i}.
    result += y.pow(term.dx) * BiPoly::monomial(j - term.dx, 0, term.c);
  }
  return result;
}

VerificationReport verify(IdentityId id, int max_n, int max_order, int trunc) {
  if (max_n < 0) throw RangeError("max_n must be nonnegative");
  if (trunc < max_n) throw RangeError("truncation order " + std::to_string(trunc) + " is below max_n " +
                                      std::to_string(max_n));
  if (max_order < 1) throw RangeError("max_order must be at least 1");

  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.identity = id;
  report.max_n = max_n;
  report.max_order = max_order;
  report.trunc = trunc;
  CaseSink sink(report);
  switch (id) {
    case IdentityId::Eq2:
      verify_eq2(max_n, trunc, sink);
      break;
    case IdentityId::Eq4:
      verify_eq4(max_n, trunc, sink);
      break;
    case IdentityId::Eq5Recon:
      verify_eq5(max_n, sink);
      break;
    case IdentityId::Eq18Equiv:
      verify_eq18(max_n, max_order, trunc, sink);
      break;
    case IdentityId::Eq21:
      verify_eq21(max_n, max_order, trunc, sink);
      break;
    case IdentityId::Eq23:
      verify_eq23(max_n, trunc, sink);
      break;
    case IdentityId::Eq25:
      verify_eq25(max_n, trunc, sink);
      break;
    case IdentityId::Thm2:
      verify_thm2(max_n, max_order, trunc, sink);
      break;
    case IdentityId::Thm2Corollary:
      verify_thm2_corollary(max_n, max_order, trunc, sink);
      break;
    case IdentityId::Thm3:
      verify_thm3(max_n, max_order, trunc, sink);
      break;
    case IdentityId::Thm4:
      verify_thm4(max_n, max_order, trunc, sink);
      break;
    case IdentityId::BSecondKindRelation:
      verify_b_second_kind(max_n, max_order, trunc, sink);
      break;
    case IdentityId::LimitsLambda0:
      verify_limits(max_n, max_order, trunc, sink);
      break;
    case IdentityId::StirlingInversion:
      verify_stirling_inversion(max_n, sink);
      break;
    case IdentityId::CompositionalInverse:
      verify_compositional_inverse(max_n, trunc, sink);
      break;
    default:
      throw UnknownIdentity("identity id " + std::to_string(static_cast<int>(id)));
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<VerificationReport> verify_all(Profile profile) {
  ProfileRanges ranges = profile_ranges(profile);
  std::vector<VerificationReport> reports;
  reports.reserve(kIdentities.size());
  for (const auto& info : kIdentities) {
    int order = info.id == IdentityId::Thm4 ? ranges.thm4_max_order : ranges.max_order;
    VerificationReport report = verify(info.id, ranges.max_n, order, ranges.trunc);
    report.profile = std::string(profile_name(profile));
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace degen
