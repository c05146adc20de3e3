#pragma once

#include <random>
#include <vector>

#include "degen/bipoly.hpp"
#include "degen/rational.hpp"
#include "degen/series.hpp"

namespace degen::testgen {

/// Seeded generators for the property tests. Fixed seeds keep failures reproducible.
class Gen {
 public:
  explicit Gen(unsigned seed = 20240601) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long bound = 9) {
    long num = integer(-bound, bound);
    long den = integer(1, bound);
    return Rational(num, den);
  }

  BiPoly bipoly(int max_dl = 2, int max_dx = 2, int max_terms = 4) {
    std::vector<BiPoly::Term> terms;
    int count = static_cast<int>(integer(0, max_terms));
    for (int i = 0; i < count; ++i) {
      terms.push_back({static_cast<int>(integer(0, max_dl)), static_cast<int>(integer(0, max_dx)), rational()});
    }
    return BiPoly::from_terms(std::move(terms));
  }

  /// Random series with the given constant term.
  EgfSeries series(int order, const BiPoly& constant, int max_dl = 1, int max_dx = 1) {
    std::vector<BiPoly> coeffs(order + 1);
    coeffs[0] = constant;
    for (int n = 1; n <= order; ++n) coeffs[n] = bipoly(max_dl, max_dx, 2);
    return EgfSeries(std::move(coeffs));
  }

 private:
  std::mt19937 rng_;
};

}  // namespace degen::testgen
