#include "gaussq/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gaussq {

namespace {

char merged_var(const UniPoly& a, const UniPoly& b) {
  if (a.is_constant()) return b.is_constant() ? a.var() : b.var();
  if (!b.is_constant() && a.var() != b.var()) {
    throw std::invalid_argument(std::string("polynomials in different variables: ") +
                                a.var() + " and " + b.var());
  }
  return a.var();
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs, char var) : coeffs_(std::move(coeffs)), var_(var) {
  trim();
}

UniPoly UniPoly::constant(const Rational& c, char var) { return UniPoly({c}, var); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t exponent, char var) {
  std::vector<Rational> v(exponent + 1);
  v[exponent] = c;
  return UniPoly(std::move(v), var);
}

UniPoly UniPoly::from_integers(std::span<const Integer> coeffs, char var) {
  std::vector<Rational> v(coeffs.begin(), coeffs.end());
  return UniPoly(std::move(v), var);
}

UniPoly UniPoly::from_ints(std::initializer_list<long> coeffs, char var) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return UniPoly(std::move(v), var);
}

UniPoly UniPoly::with_var(char var) const {
  UniPoly r = *this;
  r.var_ = var;
  return r;
}

Rational UniPoly::coeff(long i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool UniPoly::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly(var_);
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(v), var_);
}

UniPoly UniPoly::shifted(std::size_t n) const {
  if (is_zero() || n == 0) return *this;
  std::vector<Rational> v(n + coeffs_.size());
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<long>(n));
  return UniPoly(std::move(v), var_);
}

UniPoly UniPoly::substitute_power(std::size_t s) const {
  if (s == 0) throw std::invalid_argument("substitute_power with s = 0");
  if (is_zero() || s == 1) return *this;
  std::vector<Rational> v((coeffs_.size() - 1) * s + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * s] = coeffs_[i];
  return UniPoly(std::move(v), var_);
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result = constant(1, var_);
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

UniPoly UniPoly::unit_constant() const {
  if (is_zero() || coeffs_[0] == 0) throw DivisionByZero("unit_constant: zero constant term");
  Rational inv = 1 / coeffs_[0];
  return *this * inv;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  var_ = merged_var(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  var_ = merged_var(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  *this = *this * o;
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  const char var = merged_var(a, b);
  if (a.is_zero() || b.is_zero()) return UniPoly(var);
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  Rational tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      v[i + j] += tmp;
    }
  }
  return UniPoly(std::move(v), var);
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DivMod divmod(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
  const char var = num.is_constant() ? den.var() : num.var();
  if (num.degree() < den.degree()) return {UniPoly(var), num.with_var(var)};

  std::vector<Rational> rem(num.coeffs().begin(), num.coeffs().end());
  const auto dc = den.coeffs();
  const std::size_t dd = dc.size() - 1;
  const Rational inv_lead = 1 / dc.back();
  std::vector<Rational> quot(rem.size() - dd);
  for (std::size_t i = quot.size(); i-- > 0;) {
    Rational q = rem[i + dd] * inv_lead;
    if (q == 0) continue;
    quot[i] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= q * dc[j];
  }
  rem.resize(dd);
  return {UniPoly(std::move(quot), var), UniPoly(std::move(rem), var)};
}

NonDivisible::NonDivisible(UniPoly remainder)
    : Error("exact division failed: nonzero remainder of degree " +
            std::to_string(remainder.degree())),
      remainder_(std::move(remainder)) {}

UniPoly poly_exact_div(const UniPoly& num, const UniPoly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw NonDivisible(std::move(r));
  return q;
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly poly_lcm(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly(a.var());
  UniPoly l = poly_exact_div(a * b, poly_gcd(a, b));
  if (l.coeff(0) != 0) return l.unit_constant();
  return l.monic();
}

UniPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys, char var) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  // Newton divided differences, then expansion into the monomial basis.
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational span = xs[i] - xs[i - level];
      if (span == 0) throw std::invalid_argument("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / span;
    }
  }
  UniPoly result(var);
  for (std::size_t i = n; i-- > 0;) {
    result = result * UniPoly({-xs[i], 1}, var) + UniPoly::constant(dd[i], var);
  }
  return result;
}

}  // namespace gaussq
