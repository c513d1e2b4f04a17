#include "gaussq/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gaussq {

TruncSeries::TruncSeries(long order, char var)
    : coeffs_(static_cast<std::size_t>(std::max(order, 0L) + 1)), var_(var) {
  if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
}

TruncSeries::TruncSeries(std::vector<Rational> coeffs, char var)
    : coeffs_(std::move(coeffs)), var_(var) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncSeries: empty coefficient list");
}

TruncSeries TruncSeries::from_poly(const UniPoly& p, long order) {
  TruncSeries s(order, p.var());
  for (long i = 0; i <= std::min(order, p.degree()); ++i) s.coeffs_[i] = p.coeff(i);
  return s;
}

Rational TruncSeries::coeff(long n) const {
  if (n < 0) return 0;
  if (n > order()) {
    throw InsufficientTruncation("series coefficient " + std::to_string(n) +
                                 " requested beyond order " + std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(n)];
}

void TruncSeries::set(long n, Rational v) {
  if (n < 0 || n > order()) throw std::out_of_range("TruncSeries::set");
  coeffs_[static_cast<std::size_t>(n)] = std::move(v);
}

bool TruncSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

TruncSeries TruncSeries::truncated(long order) const {
  if (order > this->order()) throw InsufficientTruncation("cannot extend a truncated series");
  return TruncSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1), var_);
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("series orders differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("series orders differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

TruncSeries RatFun::expand(long order) const {
  if (den.coeff(0) == 0) throw NotExpandable("denominator vanishes at 0");
  TruncSeries s(order, num.is_constant() ? den.var() : num.var());
  const Rational inv0 = 1 / den.coeff(0);
  const auto dc = den.coeffs();
  for (long n = 0; n <= order; ++n) {
    Rational acc = num.coeff(n);
    const long top = std::min<long>(n, den.degree());
    for (long i = 1; i <= top; ++i) {
      if (dc[i] == 0) continue;
      acc -= dc[i] * s.coeffs()[n - i];
    }
    s.set(n, acc * inv0);
  }
  return s;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den == b.den) return {a.num + b.num, a.den};
  const UniPoly g = poly_gcd(a.den, b.den);
  const UniPoly bq = poly_exact_div(b.den, g);
  return {a.num * bq + b.num * poly_exact_div(a.den, g), a.den * bq};
}

XSeries::XSeries(long order) : coeffs_(static_cast<std::size_t>(order + 1), UniPoly('t')) {
  if (order < 0) throw std::invalid_argument("XSeries: negative order");
}

XSeries XSeries::from_bipoly(const BiPoly& p, long order) {
  XSeries s(order);
  for (long a = 0; a <= order; ++a) s.coeffs_[a] = p.x_coefficient(static_cast<int>(a));
  return s;
}

const UniPoly& XSeries::coeff(long a) const {
  if (a < 0 || a > order()) {
    throw InsufficientTruncation("x-coefficient " + std::to_string(a) + " outside order " +
                                 std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(a)];
}

void XSeries::set(long a, UniPoly t_poly) {
  if (a < 0 || a > order()) throw std::out_of_range("XSeries::set");
  coeffs_[static_cast<std::size_t>(a)] = t_poly.with_var('t');
}

int XSeries::t_degree() const {
  long d = -1;
  for (const auto& c : coeffs_) d = std::max(d, c.degree());
  return static_cast<int>(d);
}

bool XSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const UniPoly& p) { return p.is_zero(); });
}

XSeries XSeries::truncated(long order) const {
  if (order > this->order()) throw InsufficientTruncation("cannot extend a truncated series");
  XSeries s(order);
  std::copy(coeffs_.begin(), coeffs_.begin() + order + 1, s.coeffs_.begin());
  return s;
}

TruncSeries XSeries::t_slice(long c) const {
  TruncSeries s(order(), 'x');
  for (long a = 0; a <= order(); ++a) s.set(a, coeffs_[a].coeff(c));
  return s;
}

BiPoly XSeries::to_bipoly() const {
  BiPoly p;
  for (long a = 0; a <= order(); ++a) {
    const auto& c = coeffs_[a];
    for (long e = 0; e <= c.degree(); ++e) {
      p.add_term(static_cast<int>(a), static_cast<int>(e), c.coeff(e));
    }
  }
  return p;
}

namespace {

// acc += c * t^shift * p
void accumulate(std::vector<Rational>& acc, const UniPoly& p, const Rational& c, long shift) {
  const auto pc = p.coeffs();
  if (pc.empty()) return;
  const std::size_t need = pc.size() + static_cast<std::size_t>(shift);
  if (acc.size() < need) acc.resize(need);
  for (std::size_t i = 0; i < pc.size(); ++i) {
    if (pc[i] == 0) continue;
    acc[i + static_cast<std::size_t>(shift)] += c * pc[i];
  }
}

}  // namespace

XSeries XSeries::times(const BiPoly& p) const {
  XSeries r(order());
  for (long a = 0; a <= order(); ++a) {
    std::vector<Rational> acc;
    for (const auto& [key, c] : p.terms()) {
      const long src = a - key.first;
      if (src < 0) continue;
      accumulate(acc, coeffs_[src], c, key.second);
    }
    r.coeffs_[a] = UniPoly(std::move(acc), 't');
  }
  return r;
}

XSeries XSeries::times_x(const UniPoly& p) const {
  XSeries r(order());
  for (long a = 0; a <= order(); ++a) {
    std::vector<Rational> acc;
    for (long i = 0; i <= std::min(a, p.degree()); ++i) {
      const Rational ci = p.coeff(i);
      if (ci == 0) continue;
      accumulate(acc, coeffs_[a - i], ci, 0);
    }
    r.coeffs_[a] = UniPoly(std::move(acc), 't');
  }
  return r;
}

XSeries XSeries::divided_by(const BiPoly& p) const {
  const UniPoly head = p.x_coefficient(0);
  if (head.degree() != 0) {
    throw NotExpandable("x^0 part of the divisor must be a nonzero constant");
  }
  const Rational inv = 1 / head.coeff(0);
  XSeries r(order());
  for (long a = 0; a <= order(); ++a) {
    std::vector<Rational> acc(coeffs_[a].coeffs().begin(), coeffs_[a].coeffs().end());
    for (const auto& [key, c] : p.terms()) {
      if (key.first == 0) continue;
      const long src = a - key.first;
      if (src < 0) break;  // keys sorted by x exponent
      accumulate(acc, r.coeffs_[src], -c, key.second);
    }
    r.coeffs_[a] = UniPoly(std::move(acc), 't') * inv;
  }
  return r;
}

XSeries operator-(const XSeries& a, const XSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("XSeries orders differ");
  XSeries r(a.order());
  for (long i = 0; i <= a.order(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return r;
}

}  // namespace gaussq
