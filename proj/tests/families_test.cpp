#include "degen/families.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <thread>

#include "degen/errors.hpp"

using namespace degen;

namespace {

const BiPoly l = BiPoly::lambda();
const BiPoly x = BiPoly::x();

FamilySpec spec(FamilyId id, Rational order = 1, Argument arg = Argument::symbolic()) {
  return FamilySpec{id, std::move(order), std::move(arg), LambdaMode::symbolic()};
}

// Number of partitions of {1..n} into exactly k blocks, by enumerating restricted growth strings.
long count_set_partitions(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  long count = 0;
  std::vector<int> block(n, 0);
  std::function<void(int, int)> walk = [&](int i, int used) {
    if (i == n) {
      if (used == k) ++count;
      return;
    }
    for (int b = 0; b <= used && b < k; ++b) {
      block[i] = b;
      walk(i + 1, std::max(used, b + 1));
    }
  };
  walk(0, 0);
  return count;
}

// Signed Stirling numbers of the first kind: s(n+1,k) = s(n,k-1) - n s(n,k).
std::vector<std::vector<Rational>> stirling1_by_recurrence(int n_max) {
  std::vector<std::vector<Rational>> s(n_max + 1, std::vector<Rational>(n_max + 1));
  s[0][0] = 1;
  for (int n = 0; n < n_max; ++n) {
    for (int k = 1; k <= n + 1; ++k) s[n + 1][k] = s[n][k - 1] - Rational(n) * s[n][k];
  }
  return s;
}

// Euler polynomials from sum_k binom(n,k) E_k(x) + E_n(x) = 2 x^n.
std::vector<BiPoly> euler_by_recurrence(int n_max) {
  std::vector<BiPoly> e(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    BiPoly acc = x.pow(n) * Rational(2);
    for (int k = 0; k < n; ++k) acc -= e[k] * binomial(n, k);
    e[n] = acc * Rational(1, 2);
  }
  return e;
}

}  // namespace

TEST(Families, CatalogNamesRoundTrip) {
  for (const auto& info : family_catalog()) EXPECT_EQ(family_from_name(info.name), info.id);
  EXPECT_EQ(family_catalog().size(), 26u);
  EXPECT_THROW(family_from_name("no-such-family"), UnknownFamily);
}

TEST(Families, DegenerateLogarithm) {
  // Generalized binomial theorem: ((1+t)^l - 1)/l has value (l-1)(l-2)...(l-n+1) at n >= 1.
  EgfSeries s = build_egf(spec(FamilyId::DegLog), 6);
  EXPECT_EQ(s.value(0), BiPoly());
  BiPoly product(1);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(s.value(n), product) << n;
    product *= l - BiPoly(n);
  }
  EXPECT_EQ(s.value(2), l - BiPoly(1));
  EXPECT_EQ(s.value(3), (l - BiPoly(1)) * (l - BiPoly(2)));
}

TEST(Families, DegenerateExponential) {
  EXPECT_EQ(family_value(spec(FamilyId::DegExp), 2), x.pow(2) - l * x);
  EXPECT_EQ(family_value(spec(FamilyId::DegExp), 3), x * (x - l) * (x - l * Rational(2)));
  // e_l^2(t) = e_l(t)^2
  EgfSeries one = build_egf(spec(FamilyId::DegExp, 1, Argument::numeric(1)), 12);
  EXPECT_EQ(build_egf(spec(FamilyId::DegExp, 1, Argument::numeric(2)), 12), one * one);
  // e_l^x(t) e_l^{-1}(t) = e_l^{x-1}(t)
  EXPECT_EQ(build_egf(spec(FamilyId::DegExp), 10) * build_egf(spec(FamilyId::DegExp, 1, Argument::numeric(-1)), 10),
            build_egf(spec(FamilyId::DegExp, 1, Argument::shifted(-1)), 10));
  EXPECT_EQ(build_egf(spec(FamilyId::DegExp), 10), build_egf(spec(FamilyId::DegFallingFactorial), 10));
}

TEST(Families, SecondKindSpotValues) {
  EXPECT_EQ(family_value(spec(FamilyId::Type2DegBernoulli2ndKind, 1, Argument::numeric(0)), 0), BiPoly(2));
  EXPECT_EQ(family_value(spec(FamilyId::DegBernoulli2ndKind, 1, Argument::numeric(0)), 1),
            (BiPoly(1) - l) * Rational(1, 2));
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(family_value(spec(FamilyId::Type2DegBernoulli, k), 0), BiPoly(Rational(2).pow(-k))) << k;
  }
}

TEST(Families, TriangleSpotValues) {
  EXPECT_EQ(triangular_number(FamilyId::Stirling2, 4, 2), BiPoly(7));
  EXPECT_EQ(triangular_number(FamilyId::DegStirling2, 2, 1), BiPoly(1) - l);
  EXPECT_EQ(triangular_number(FamilyId::DegStirling1, 2, 1), l - BiPoly(1));
  EXPECT_EQ(triangular_number(FamilyId::DegCentralFactorial, 2, 1), -l);
  EXPECT_EQ(triangular_number(FamilyId::CentralFactorialT, 4, 2), BiPoly(1));
  EXPECT_EQ(triangular_number(FamilyId::CentralFactorialT, 3, 2), BiPoly());
  EXPECT_EQ(triangular_number(FamilyId::DegStirling2, 2, 1, LambdaMode::scaled(Rational(1, 2))),
            BiPoly(1) - l * Rational(1, 2));
  EXPECT_EQ(triangular_number(FamilyId::DegStirling2, 2, 1, LambdaMode::numeric(0)), BiPoly(1));
}

TEST(Families, TriangleShapeAndNormalization) {
  for (FamilyId id : {FamilyId::DegStirling1, FamilyId::DegStirling2, FamilyId::DegCentralFactorial,
                      FamilyId::Stirling1, FamilyId::Stirling2, FamilyId::CentralFactorialT}) {
    for (int n = 0; n <= 12; ++n) {
      EXPECT_EQ(triangular_number(id, n, n), BiPoly(1)) << n;
      EXPECT_TRUE(triangular_number(id, n, n + 1).is_zero());
      EXPECT_TRUE(triangular_number(id, n, -1).is_zero());
    }
    EXPECT_TRUE(triangular_number(id, 3, 0).is_zero());
  }
  EXPECT_THROW(triangular_number(FamilyId::Euler, 2, 1), UnknownFamily);
}

TEST(Families, Stirling2MatchesSetPartitionCount) {
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(triangular_number(FamilyId::Stirling2, n, k), BiPoly(count_set_partitions(n, k))) << n << "," << k;
    }
  }
}

TEST(Families, Stirling1MatchesRecurrence) {
  auto s = stirling1_by_recurrence(12);
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(triangular_number(FamilyId::Stirling1, n, k), BiPoly(s[n][k]));
  }
}

TEST(Families, TriangleFromEgfMatchesTable) {
  for (int k = 0; k <= 4; ++k) {
    EgfSeries col = build_egf(FamilySpec{FamilyId::DegCentralFactorial, k}, 10);
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(col.value(n), triangular_number(FamilyId::DegCentralFactorial, n, k));
  }
  EXPECT_THROW(build_egf(FamilySpec{FamilyId::Stirling2, Rational(1, 2)}, 4), UnsupportedOrder);
  EXPECT_THROW(build_egf(FamilySpec{FamilyId::Stirling2, -1}, 4), UnsupportedOrder);
}

TEST(Families, FallingFactorials) {
  EXPECT_EQ(falling_factorial(3, FactorialMode::Classical, x), x.pow(3) - x.pow(2) * Rational(3) + x * Rational(2));
  EXPECT_EQ(falling_factorial(2, FactorialMode::Degenerate, x).substitute(Var::Lambda, Substitution::value(0)),
            x.pow(2));
  EXPECT_EQ(falling_factorial(2, FactorialMode::Classical, BiPoly(Rational(3, 2))), BiPoly(Rational(3, 4)));
  EXPECT_EQ(falling_factorial(0, FactorialMode::Degenerate, x), BiPoly(1));
  EXPECT_THROW(falling_factorial(-1, FactorialMode::Classical, x), DomainError);
  // The EGF of (x)_n is (1+t)^x built through exp/log.
  EXPECT_EQ(build_egf(spec(FamilyId::FallingFactorial), 10), elementary::one_plus_t_pow(10, x));
}

TEST(Families, CentralFactorialPowers) {
  EXPECT_EQ(central_factorial_power(0), BiPoly(1));
  EXPECT_EQ(central_factorial_power(2), x.pow(2));
  EXPECT_EQ(central_factorial_power(3), x.pow(3) - x * Rational(1, 4));
  EXPECT_EQ(central_factorial_power(4), x.pow(2) * (x.pow(2) - BiPoly(1)));
}

TEST(Families, ClassicalValues) {
  EXPECT_EQ(classical_value(FamilyId::BernoulliOrderR, 2, Argument::numeric(0)), BiPoly(Rational(1, 6)));
  EXPECT_EQ(classical_value(FamilyId::Daehee, 1, Argument::numeric(0)), BiPoly(Rational(-1, 2)));
  for (int n = 0; n <= 10; ++n) {
    Rational expected = factorial(n) * Rational(n % 2 == 0 ? 1 : -1, n + 1);
    EXPECT_EQ(classical_value(FamilyId::Daehee, n, Argument::numeric(0)), BiPoly(expected)) << n;
  }
  EXPECT_EQ(classical_value(FamilyId::Type2Bernoulli, 0), BiPoly(Rational(1, 2)));
  EXPECT_EQ(classical_value(FamilyId::Type2Euler, 0), BiPoly(1));
  EXPECT_THROW(classical_value(FamilyId::DegBernoulli, 1), UnknownFamily);
}

TEST(Families, BernoulliAndEulerMatchRecurrences) {
  std::vector<Rational> bern(13);
  bern[0] = 1;
  for (int n = 1; n <= 12; ++n) {
    Rational sum;
    for (int k = 0; k < n; ++k) sum += binomial(n + 1, k) * bern[k];
    bern[n] = -sum / Rational(n + 1);
  }
  EgfSeries b = build_egf(spec(FamilyId::BernoulliOrderR), 12);
  auto euler = euler_by_recurrence(12);
  EgfSeries e = build_egf(spec(FamilyId::Euler), 12);
  for (int n = 0; n <= 12; ++n) {
    BiPoly expected;
    for (int k = 0; k <= n; ++k) expected += x.pow(n - k) * (binomial(n, k) * bern[k]);
    EXPECT_EQ(b.value(n), expected) << n;
    EXPECT_EQ(e.value(n), euler[n]) << n;
  }
}

TEST(Families, OrderValidation) {
  EXPECT_THROW(build_egf(spec(FamilyId::DegLog, 2), 4), UnsupportedOrder);
  // 2^{1/2} is irrational: the type 2 kernel has constant term 2.
  EXPECT_THROW(build_egf(spec(FamilyId::Type2DegBernoulli2ndKind, Rational(1, 2)), 4), UnsupportedOrder);
  // Half orders work when the kernel starts at 1, and squaring recovers order 1.
  EgfSeries half = build_egf(spec(FamilyId::DegBernoulli2ndKind, Rational(1, 2), Argument::numeric(0)), 8);
  EXPECT_EQ(half * half, build_egf(spec(FamilyId::DegBernoulli2ndKind, 1, Argument::numeric(0)), 8));
  EgfSeries squared = build_egf(spec(FamilyId::Type2DegBernoulli2ndKind, 2, Argument::numeric(0)), 6);
  EgfSeries first = build_egf(spec(FamilyId::Type2DegBernoulli2ndKind, 1, Argument::numeric(0)), 6);
  EXPECT_EQ(squared, first * first);
  EXPECT_EQ(squared.value(0), BiPoly(4));
}

TEST(Families, TruncationConsistency) {
  for (const auto& info : family_catalog()) {
    FamilySpec s = spec(info.id, info.kind == FamilyKind::Triangle ? 2 : 1);
    EXPECT_EQ(build_egf(s, 14).truncate(9), build_egf(s, 9)) << info.name;
  }
}

TEST(Families, LambdaModes) {
  FamilySpec s = spec(FamilyId::DegBernoulli2ndKind);
  BiPoly symbolic = family_value(s, 3);
  s.lambda = LambdaMode::scaled(Rational(1, 2));
  EXPECT_EQ(family_value(s, 3), symbolic.substitute(Var::Lambda, Substitution::scaled(Rational(1, 2))));
  s.lambda = LambdaMode::numeric(3);
  EXPECT_EQ(family_value(s, 3), symbolic.substitute(Var::Lambda, Substitution::value(3)));
}

TEST(Families, ConcurrentTriangleReads) {
  std::vector<BiPoly> expected;
  for (int n = 0; n <= 20; ++n) expected.push_back(triangular_number(FamilyId::DegStirling1, n, n / 2));
  std::vector<std::thread> threads;
  std::vector<int> mismatches(4, 0);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (int n = 20; n >= 0; --n) {
        LambdaMode mode = LambdaMode::scaled(Rational(t + 2));
        BiPoly scaled = triangular_number(FamilyId::DegStirling1, n, n / 2, mode);
        BiPoly reference = expected[n].substitute(Var::Lambda, Substitution::scaled(Rational(t + 2)));
        if (scaled != reference || triangular_number(FamilyId::DegStirling1, n, n / 2) != expected[n]) {
          ++mismatches[t];
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int m : mismatches) EXPECT_EQ(m, 0);
}
