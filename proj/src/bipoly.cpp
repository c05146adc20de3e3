#include "degen/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "degen/errors.hpp"

namespace degen {

bool graded_lex_less(int dl_a, int dx_a, int dl_b, int dx_b) {
  int ta = dl_a + dx_a;
  int tb = dl_b + dx_b;
  if (ta != tb) return ta < tb;
  return dl_a < dl_b;
}

namespace {

bool term_less(const BiPoly::Term& a, const BiPoly::Term& b) {
  return graded_lex_less(a.dl, a.dx, b.dl, b.dx);
}

// Merges two canonical term lists; `sign` = -1 subtracts b.
std::vector<BiPoly::Term> merge(const std::vector<BiPoly::Term>& a, const std::vector<BiPoly::Term>& b, int sign) {
  std::vector<BiPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && term_less(*ia, *ib))) {
      out.push_back(*ia++);
    } else if (ia == a.end() || term_less(*ib, *ia)) {
      out.push_back(*ib++);
      if (sign < 0) out.back().c = -out.back().c;
    } else {
      Rational c = sign < 0 ? ia->c - ib->c : ia->c + ib->c;
      if (!c.is_zero()) out.push_back({ia->dl, ia->dx, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

// Dense coefficient grid indexed by (dl, dx), read back in canonical order.
class Grid {
 public:
  Grid(int max_dl, int max_dx) : max_dl_(max_dl), max_dx_(max_dx), cells_((max_dl + 1) * (max_dx + 1)) {}

  mpq_class& at(int dl, int dx) { return cells_[dl * (max_dx_ + 1) + dx]; }

  std::vector<BiPoly::Term> collect() {
    std::vector<BiPoly::Term> out;
    for (int total = 0; total <= max_dl_ + max_dx_; ++total) {
      for (int dl = std::max(0, total - max_dx_); dl <= std::min(total, max_dl_); ++dl) {
        mpq_class& c = at(dl, total - dl);
        if (sgn(c) != 0) out.push_back({dl, total - dl, Rational(std::move(c))});
      }
    }
    return out;
  }

 private:
  int max_dl_;
  int max_dx_;
  std::vector<mpq_class> cells_;
};

std::string monomial_str(int dl, int dx) {
  std::string s;
  auto add = [&s](const char* name, int d) {
    if (d == 0) return;
    if (!s.empty()) s += '*';
    s += name;
    if (d > 1) s += '^' + std::to_string(d);
  };
  add("l", dl);
  add("x", dx);
  return s;
}

}  // namespace

BiPoly::BiPoly(Rational c) {
  if (!c.is_zero()) terms_.push_back({0, 0, std::move(c)});
}

BiPoly BiPoly::monomial(int dl, int dx, Rational c) {
  if (dl < 0 || dx < 0) throw DomainError("negative exponent in monomial");
  BiPoly p;
  if (!c.is_zero()) p.terms_.push_back({dl, dx, std::move(c)});
  return p;
}

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
  int max_dl = 0;
  int max_dx = 0;
  for (const auto& t : terms) {
    if (t.dl < 0 || t.dx < 0) throw DomainError("negative exponent in term");
    max_dl = std::max(max_dl, t.dl);
    max_dx = std::max(max_dx, t.dx);
  }
  Grid grid(max_dl, max_dx);
  for (const auto& t : terms) grid.at(t.dl, t.dx) += t.c.raw();
  BiPoly p;
  p.terms_ = grid.collect();
  return p;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].dl == 0 && terms_[0].dx == 0);
}

Rational BiPoly::coeff(int dl, int dx) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{dl, dx, 0}, term_less);
  if (it != terms_.end() && it->dl == dl && it->dx == dx) return it->c;
  return 0;
}

int BiPoly::degree_lambda() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.dl);
  return d;
}

int BiPoly::degree_x() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.dx);
  return d;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  *this = *this * o;
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.c *= c;
  }
  return *this;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  r.terms_ = merge(a.terms_, b.terms_, +1);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  r.terms_ = merge(a.terms_, b.terms_, -1);
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b * a.terms_[0].c;
  if (b.is_constant()) return a * b.terms_[0].c;
  Grid grid(a.degree_lambda() + b.degree_lambda(), a.degree_x() + b.degree_x());
  mpq_class prod;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      mpq_mul(prod.get_mpq_t(), ta.c.raw().get_mpq_t(), tb.c.raw().get_mpq_t());
      grid.at(ta.dl + tb.dl, ta.dx + tb.dx) += prod;
    }
  }
  BiPoly r;
  r.terms_ = grid.collect();
  return r;
}

BiPoly operator-(const BiPoly& a) {
  BiPoly r = a;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

BiPoly BiPoly::pow(unsigned exponent) const {
  BiPoly result(1);
  BiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

BiPoly BiPoly::substitute(Var target, const Substitution& s) const {
  auto degree_of = [target](const Term& t) { return target == Var::Lambda ? t.dl : t.dx; };
  switch (s.kind) {
    case Substitution::Kind::Value: {
      std::vector<Term> out;
      out.reserve(terms_.size());
      for (const auto& t : terms_) {
        Term u = t;
        u.c *= s.c.pow(degree_of(t));
        (target == Var::Lambda ? u.dl : u.dx) = 0;
        out.push_back(std::move(u));
      }
      return from_terms(std::move(out));
    }
    case Substitution::Kind::Scaled: {
      std::vector<Term> out;
      out.reserve(terms_.size());
      for (const auto& t : terms_) {
        Term u = t;
        u.c *= s.c.pow(degree_of(t));
        out.push_back(std::move(u));
      }
      return from_terms(std::move(out));
    }
    case Substitution::Kind::Shifted: {
      BiPoly var = target == Var::Lambda ? lambda() : x();
      return compose(target, var + BiPoly(s.c));
    }
  }
  return *this;
}

BiPoly BiPoly::compose(Var target, const BiPoly& replacement) const {
  int top = target == Var::Lambda ? degree_lambda() : degree_x();
  // Split into slices p = sum_j slice_j * target^j, then Horner.
  std::vector<std::vector<Term>> slices(top + 1);
  for (const auto& t : terms_) {
    Term u = t;
    int j = target == Var::Lambda ? t.dl : t.dx;
    (target == Var::Lambda ? u.dl : u.dx) = 0;
    slices[j].push_back(std::move(u));
  }
  BiPoly result;
  for (int j = top; j >= 0; --j) {
    result = result * replacement + from_terms(std::move(slices[j]));
  }
  return result;
}

BiPoly BiPoly::divide_by_lambda_power(int k) const {
  BiPoly r = *this;
  for (auto& t : r.terms_) {
    if (t.dl < k) {
      throw NotDivisible("term l^" + std::to_string(t.dl) + " in " + str() + " is not divisible by l^" +
                         std::to_string(k));
    }
    t.dl -= k;
  }
  // Lowering every λ-degree by k keeps the graded-lex order intact.
  return r;
}

Rational BiPoly::evaluate(const Rational& lambda_value, const Rational& x_value) const {
  Rational sum;
  for (const auto& t : terms_) sum += t.c * lambda_value.pow(t.dl) * x_value.pow(t.dx);
  return sum;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    Rational mag = t.c.abs();
    std::string mono = monomial_str(t.dl, t.dx);
    if (mono.empty()) {
      os << mag.str();
    } else if (mag.is_one()) {
      os << mono;
    } else {
      os << mag.str() << '*' << mono;
    }
  }
  return os.str();
}

}  // namespace degen
