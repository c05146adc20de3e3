#include "degen/series.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "degen/errors.hpp"

namespace degen {

namespace {

void check_order(int order) {
  if (order < 0) throw DomainError("negative truncation order " + std::to_string(order));
}

bool is_one(const BiPoly& p) { return p == BiPoly(1); }

}  // namespace

EgfSeries::EgfSeries(int order) {
  check_order(order);
  coeffs_.resize(order + 1);
}

EgfSeries::EgfSeries(std::vector<BiPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("series needs at least one coefficient");
}

EgfSeries EgfSeries::from_values(const std::vector<BiPoly>& values) {
  std::vector<BiPoly> coeffs;
  coeffs.reserve(values.size());
  for (std::size_t n = 0; n < values.size(); ++n) {
    coeffs.push_back(values[n] * factorial(static_cast<long>(n)).inverse());
  }
  return EgfSeries(std::move(coeffs));
}

EgfSeries EgfSeries::constant(const BiPoly& c, int order) {
  EgfSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

EgfSeries EgfSeries::t(int order, const Rational& c) {
  EgfSeries s(order);
  if (order >= 1) s.coeffs_[1] = BiPoly(c);
  return s;
}

EgfSeries EgfSeries::generate(int order, const std::function<BiPoly(int)>& coeff) {
  EgfSeries s(order);
  for (int n = 0; n <= order; ++n) s.coeffs_[n] = coeff(n);
  return s;
}

const BiPoly& EgfSeries::coeff(int n) const {
  if (n < 0 || n > order()) {
    throw IndexBeyondTruncation("index " + std::to_string(n) + " outside 0.." + std::to_string(order()));
  }
  return coeffs_[n];
}

BiPoly EgfSeries::value(int n) const { return coeff(n) * factorial(n); }

std::vector<BiPoly> EgfSeries::values() const {
  std::vector<BiPoly> out;
  out.reserve(coeffs_.size());
  for (int n = 0; n <= order(); ++n) out.push_back(value(n));
  return out;
}

EgfSeries EgfSeries::truncate(int new_order) const {
  check_order(new_order);
  if (new_order >= order()) return *this;
  return EgfSeries(std::vector<BiPoly>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

EgfSeries EgfSeries::map(const std::function<BiPoly(const BiPoly&)>& fn) const {
  std::vector<BiPoly> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(fn(c));
  return EgfSeries(std::move(out));
}

EgfSeries& EgfSeries::operator+=(const EgfSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

EgfSeries& EgfSeries::operator-=(const EgfSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

EgfSeries& EgfSeries::operator*=(const EgfSeries& o) {
  *this = *this * o;
  return *this;
}

EgfSeries& EgfSeries::operator*=(const BiPoly& c) {
  for (auto& a : coeffs_) a *= c;
  return *this;
}

EgfSeries operator*(const EgfSeries& a, const EgfSeries& b) {
  int order = std::min(a.order(), b.order());
  EgfSeries r(order);
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

EgfSeries operator-(const EgfSeries& a) {
  EgfSeries r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

EgfSeries series_div(const EgfSeries& f, const EgfSeries& g) {
  const BiPoly& g0 = g.coeff(0);
  if (g0.is_zero() || !g0.is_constant()) {
    throw DivisionByNonUnit("divisor constant term " + g0.str() + " is not a nonzero rational");
  }
  Rational inv = g0.constant_term().inverse();
  int order = std::min(f.order(), g.order());
  std::vector<BiPoly> h(order + 1);
  for (int n = 0; n <= order; ++n) {
    BiPoly acc = f.coeff(n);
    for (int k = 1; k <= n; ++k) {
      if (g.coeff(k).is_zero() || h[n - k].is_zero()) continue;
      acc -= g.coeff(k) * h[n - k];
    }
    h[n] = acc * inv;
  }
  return EgfSeries(std::move(h));
}

EgfSeries shift_div_t(const EgfSeries& f, int m) {
  if (m < 1) throw DomainError("shift_div_t needs m >= 1");
  if (m > f.order()) throw IndexBeyondTruncation("cannot divide a series of order " + std::to_string(f.order()) +
                                                 " by t^" + std::to_string(m));
  for (int n = 0; n < m; ++n) {
    if (!f.coeff(n).is_zero()) {
      throw NonzeroLowOrder("coefficient of t^" + std::to_string(n) + " is " + f.coeff(n).str());
    }
  }
  return EgfSeries(std::vector<BiPoly>(f.coeffs().begin() + m, f.coeffs().end()));
}

EgfSeries compose(const EgfSeries& f, const EgfSeries& g) {
  if (!g.coeff(0).is_zero()) {
    throw NonzeroConstantInner("inner series has constant term " + g.coeff(0).str());
  }
  int order = std::min(f.order(), g.order());
  EgfSeries inner = g.truncate(order);
  EgfSeries result = EgfSeries::constant(f.coeff(order), order);
  for (int n = order - 1; n >= 0; --n) {
    result = result * inner;
    result += EgfSeries::constant(f.coeff(n), order);
  }
  return result;
}

EgfSeries series_exp(const EgfSeries& f) {
  if (!f.coeff(0).is_zero()) throw BadConstantTerm("exp needs f_0 = 0, got " + f.coeff(0).str());
  int order = f.order();
  // h' = f' h  =>  n h_n = sum_{k=1}^{n} k f_k h_{n-k}
  std::vector<BiPoly> h(order + 1);
  h[0] = BiPoly(1);
  for (int n = 1; n <= order; ++n) {
    BiPoly acc;
    for (int k = 1; k <= n; ++k) {
      if (f.coeff(k).is_zero() || h[n - k].is_zero()) continue;
      acc += f.coeff(k) * h[n - k] * Rational(k);
    }
    h[n] = acc * Rational(1, n);
  }
  return EgfSeries(std::move(h));
}

EgfSeries series_log(const EgfSeries& f) {
  if (!is_one(f.coeff(0))) throw BadConstantTerm("log needs f_0 = 1, got " + f.coeff(0).str());
  int order = f.order();
  // g' f = f'  =>  n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}
  std::vector<BiPoly> g(order + 1);
  for (int n = 1; n <= order; ++n) {
    BiPoly acc = f.coeff(n) * Rational(n);
    for (int k = 1; k < n; ++k) {
      if (g[k].is_zero() || f.coeff(n - k).is_zero()) continue;
      acc -= g[k] * f.coeff(n - k) * Rational(k);
    }
    g[n] = acc * Rational(1, n);
  }
  return EgfSeries(std::move(g));
}

EgfSeries pow_integer(const EgfSeries& f, unsigned k) {
  EgfSeries result = EgfSeries::constant(BiPoly(1), f.order());
  EgfSeries base = f;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

EgfSeries pow_rational(const EgfSeries& f, const Rational& alpha) {
  if (!is_one(f.coeff(0))) throw BadConstantTerm("power needs f_0 = 1, got " + f.coeff(0).str());
  if (alpha.is_integer()) {
    long k = alpha.to_long();
    if (k >= 0) return pow_integer(f, static_cast<unsigned>(k));
    EgfSeries inverse = series_div(EgfSeries::constant(BiPoly(1), f.order()), f);
    return pow_integer(inverse, static_cast<unsigned>(-k));
  }
  return series_exp(series_log(f) * BiPoly(alpha));
}

namespace elementary {

EgfSeries exp_scaled(int order, const Rational& c) {
  return EgfSeries::generate(order, [&c](int n) { return BiPoly(c.pow(n) * factorial(n).inverse()); });
}

EgfSeries log1p(int order) {
  return EgfSeries::generate(order, [](int n) {
    if (n == 0) return BiPoly();
    return BiPoly(Rational(n % 2 == 1 ? 1 : -1, n));
  });
}

EgfSeries inv_one_plus_t(int order) {
  return EgfSeries::generate(order, [](int n) { return BiPoly(n % 2 == 0 ? 1 : -1); });
}

EgfSeries one_plus_t_pow(int order, const BiPoly& exponent) {
  return series_exp(log1p(order) * exponent);
}

}  // namespace elementary

}  // namespace degen
