#include "gaussq/cyclotomic.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace gaussq {

long euler_phi(long n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int mobius(long n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be positive");
  int sign = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::vector<long> divisors(long n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

UniPoly cyclotomic(int m, char var) {
  if (m < 1) throw std::invalid_argument("cyclotomic: m must be positive");
  // Bottom-up over the divisors of m: Phi_d = (1 - x^d) / prod_{e | d, e < d} Phi_e.
  const auto divs = divisors(m);
  std::map<long, UniPoly> table;
  for (long d : divs) {
    UniPoly p = UniPoly::constant(1, var) - UniPoly::monomial(1, static_cast<std::size_t>(d), var);
    for (long e : divs) {
      if (e >= d) break;
      if (d % e == 0) p = poly_exact_div(p, table.at(e));
    }
    table.emplace(d, std::move(p));
  }
  return table.at(m);
}

std::optional<std::map<int, int>> cyclotomic_factorization(const UniPoly& p, int max_m) {
  if (p.is_zero() || p.coeff(0) != 1) return std::nullopt;
  UniPoly rest = p;
  std::map<int, int> exps;
  for (int m = 1; m <= max_m && rest.degree() > 0; ++m) {
    if (euler_phi(m) > rest.degree()) continue;
    const UniPoly phi = cyclotomic(m, p.var());
    while (rest.degree() >= phi.degree()) {
      auto [q, r] = divmod(rest, phi);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++exps[m];
    }
  }
  if (rest != UniPoly::constant(1)) return std::nullopt;
  return exps;
}

CycloNum::CycloNum(int modulus) : CycloNum(modulus, UniPoly::constant(1, 'z')) {}

CycloNum::CycloNum(int modulus, const UniPoly& rep)
    : modulus_(modulus),
      phi_(std::make_shared<const UniPoly>(cyclotomic(modulus, 'z'))),
      rep_(rep.with_var('z')) {
  reduce();
}

CycloNum CycloNum::rational(int modulus, const Rational& r) {
  return CycloNum(modulus, UniPoly::constant(r, 'z'));
}

CycloNum CycloNum::root_power(int modulus, long e) {
  long r = e % modulus;
  if (r < 0) r += modulus;
  return CycloNum(modulus, UniPoly::monomial(1, static_cast<std::size_t>(r), 'z'));
}

CycloNum CycloNum::scalar(const Rational& r) const {
  CycloNum c = *this;
  c.rep_ = UniPoly::constant(r, 'z');
  return c;
}

Rational CycloNum::rational_value() const {
  if (!is_rational()) throw std::logic_error("CycloNum is not rational");
  return rep_.coeff(0);
}

CycloNum CycloNum::conjugate(long s) const {
  if (std::gcd(s, static_cast<long>(modulus_)) != 1) {
    throw std::invalid_argument("conjugate: exponent not coprime to the modulus");
  }
  long sm = s % modulus_;
  if (sm < 0) sm += modulus_;
  std::vector<Rational> v(static_cast<std::size_t>(modulus_));
  for (long j = 0; j <= rep_.degree(); ++j) v[(j * sm) % modulus_] += rep_.coeff(j);
  CycloNum r = *this;
  r.rep_ = UniPoly(std::move(v), 'z');
  r.reduce();
  return r;
}

Rational CycloNum::trace() const {
  // Tr(zeta^j) is the Ramanujan sum mu(h/g) phi(h) / phi(h/g), g = gcd(h, j).
  Rational acc = 0;
  const long h = modulus_;
  const long phi_h = euler_phi(h);
  for (long j = 0; j <= rep_.degree(); ++j) {
    const Rational& c = rep_.coeffs()[j];
    if (c == 0) continue;
    const long q = h / std::gcd(h, j);
    acc += c * (mobius(q) * (phi_h / euler_phi(q)));
  }
  return acc;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(modulus_) + ")");
  UniPoly r0 = *phi_, r1 = rep_;
  UniPoly s0('z'), s1 = UniPoly::constant(1, 'z');
  while (!r1.is_zero()) {
    UniPoly q = divmod(r0, r1).quotient;
    UniPoly r2 = r0 - q * r1;
    UniPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw DivisionByZero("element not invertible");
  CycloNum r = *this;
  r.rep_ = s0 * (1 / r0.coeff(0));
  r.reduce();
  return r;
}

CycloNum CycloNum::pow(long e) const {
  CycloNum base = e < 0 ? inverse() : *this;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  CycloNum result(modulus_);
  while (n > 0) {
    if (n & 1UL) result *= base;
    n >>= 1UL;
    if (n > 0) base *= base;
  }
  return result;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  check_same_field(o);
  rep_ += o.rep_;
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  check_same_field(o);
  rep_ -= o.rep_;
  return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  check_same_field(o);
  if (rep_.is_constant() || o.rep_.is_constant()) {
    rep_ = rep_ * o.rep_;
    return *this;
  }
  rep_ = rep_ * o.rep_;
  reduce();
  return *this;
}

void CycloNum::check_same_field(const CycloNum& o) const {
  if (modulus_ != o.modulus_) throw std::invalid_argument("CycloNum: mismatched cyclotomic fields");
}

void CycloNum::reduce() {
  if (rep_.degree() >= phi_->degree()) rep_ = divmod(rep_, *phi_).remainder.with_var('z');
}

CycloPoly::CycloPoly(int modulus, std::vector<CycloNum> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.modulus() != modulus_) throw std::invalid_argument("CycloPoly: mismatched fields");
  }
  trim();
}

CycloPoly CycloPoly::from_rational(int modulus, const UniPoly& p) {
  std::vector<CycloNum> v;
  v.reserve(p.size());
  const CycloNum one(modulus);
  for (const auto& c : p.coeffs()) v.push_back(one.scalar(c));
  return CycloPoly(modulus, std::move(v));
}

CycloPoly CycloPoly::scaled(const UniPoly& p, const CycloNum& zeta) {
  std::vector<CycloNum> v;
  v.reserve(p.size());
  CycloNum power(zeta.modulus());
  for (const auto& c : p.coeffs()) {
    v.push_back(power.scalar(c) * power);
    power *= zeta;
  }
  return CycloPoly(zeta.modulus(), std::move(v));
}

CycloPoly CycloPoly::conjugate(long s) const {
  std::vector<CycloNum> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.conjugate(s));
  return CycloPoly(modulus_, std::move(v));
}

UniPoly CycloPoly::trace() const {
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.trace());
  return UniPoly(std::move(v), 'x');
}

UniPoly CycloPoly::rational_part() const {
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.rational_value());
  return UniPoly(std::move(v), 'x');
}

CycloPoly operator*(const CycloPoly& a, const CycloPoly& b) {
  if (a.modulus_ != b.modulus_) throw std::invalid_argument("CycloPoly: mismatched fields");
  if (a.is_zero() || b.is_zero()) return CycloPoly(a.modulus_);
  std::vector<CycloNum> v(a.coeffs_.size() + b.coeffs_.size() - 1, a.coeffs_[0].scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return CycloPoly(a.modulus_, std::move(v));
}

CycloPoly operator*(const CycloPoly& a, const CycloNum& c) {
  std::vector<CycloNum> v;
  v.reserve(a.coeffs_.size());
  for (const auto& x : a.coeffs_) v.push_back(x * c);
  return CycloPoly(a.modulus_, std::move(v));
}

CycloPoly operator+(const CycloPoly& a, const CycloPoly& b) {
  if (a.modulus_ != b.modulus_) throw std::invalid_argument("CycloPoly: mismatched fields");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<CycloNum> v(std::max(a.coeffs_.size(), b.coeffs_.size()), a.coeffs_[0].scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return CycloPoly(a.modulus_, std::move(v));
}

void CycloPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RatFun cyclo_sum_over_roots(int h, const std::function<CycloRatFun(const CycloNum&)>& expr) {
  if (h < 1) throw std::invalid_argument("cyclo_sum_over_roots: h must be positive");
  RatFun total{UniPoly('x'), UniPoly::constant(1, 'x')};
  for (long d : divisors(h)) {
    const int md = static_cast<int>(d);
    const CycloRatFun term = expr(CycloNum::root_power(md, 1));
    if (term.num.modulus() != md || term.den.modulus() != md) {
      throw std::invalid_argument("cyclo_sum_over_roots: expression left Q(zeta_d)");
    }
    if (term.den.is_zero()) {
      throw DivisionByZero("denominator vanishes in Q(zeta_" + std::to_string(d) + ")");
    }
    // Tr(A/B) = Tr(A * B~) / N(B), with B~ the product of the nontrivial conjugates of B.
    CycloPoly cofactor = CycloPoly::from_rational(md, UniPoly::constant(1, 'x'));
    for (long s = 2; s < d; ++s) {
      if (std::gcd(s, d) == 1) cofactor = cofactor * term.den.conjugate(s);
    }
    const UniPoly norm = (term.den * cofactor).rational_part();
    const UniPoly num = (term.num * cofactor).trace();
    total = total + RatFun{num, norm};
  }
  return total;
}

}  // namespace gaussq
