#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "gaussq/poly.hpp"
#include "gaussq/series.hpp"

namespace gaussq {

long euler_phi(long n);
int mobius(long n);
std::vector<long> divisors(long n);

/// m-th cyclotomic polynomial normalized to constant term 1, so
/// cyclotomic(1) = 1 - x and prod_{d | m} cyclotomic(d) = 1 - x^m.
UniPoly cyclotomic(int m, char var = 'x');

/// Exponents e_m with p = prod cyclotomic(m)^e_m, found by trial division
/// against cyclotomic(1..max_m). Empty if p is not such a product (p must
/// have constant term 1 to qualify).
std::optional<std::map<int, int>> cyclotomic_factorization(const UniPoly& p, int max_m = 64);

/// Element of Q(zeta_h), stored as a polynomial in zeta of degree < phi(h)
/// reduced modulo the h-th cyclotomic polynomial.
class CycloNum {
 public:
  // 1 in Q(zeta_h).
  explicit CycloNum(int modulus);
  CycloNum(int modulus, const UniPoly& rep);

  static CycloNum rational(int modulus, const Rational& r);
  // r in the same field as *this, sharing the cached modulus polynomial.
  CycloNum scalar(const Rational& r) const;
  // zeta_h^e for any integer e.
  static CycloNum root_power(int modulus, long e);

  int modulus() const { return modulus_; }
  const UniPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.is_constant(); }
  Rational rational_value() const;

  // Image under zeta -> zeta^s, gcd(s, h) = 1.
  CycloNum conjugate(long s) const;
  // Sum of all Galois conjugates.
  Rational trace() const;
  CycloNum inverse() const;
  CycloNum pow(long e) const;

  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend bool operator==(const CycloNum& a, const CycloNum& b) {
    return a.modulus_ == b.modulus_ && a.rep_ == b.rep_;
  }

 private:
  void check_same_field(const CycloNum& o) const;
  void reduce();

  int modulus_;
  std::shared_ptr<const UniPoly> phi_;
  UniPoly rep_;
};

/// Polynomial in x with coefficients in Q(zeta_h).
class CycloPoly {
 public:
  explicit CycloPoly(int modulus) : modulus_(modulus) {}
  CycloPoly(int modulus, std::vector<CycloNum> coeffs);

  static CycloPoly from_rational(int modulus, const UniPoly& p);
  // p(zeta * x)
  static CycloPoly scaled(const UniPoly& p, const CycloNum& zeta);

  int modulus() const { return modulus_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<CycloNum>& coeffs() const { return coeffs_; }

  CycloPoly conjugate(long s) const;
  // Coefficientwise trace down to Q[x].
  UniPoly trace() const;
  // Requires every coefficient to be rational.
  UniPoly rational_part() const;

  friend CycloPoly operator*(const CycloPoly& a, const CycloPoly& b);
  friend CycloPoly operator*(const CycloPoly& a, const CycloNum& c);
  friend CycloPoly operator+(const CycloPoly& a, const CycloPoly& b);

 private:
  void trim();

  int modulus_;
  std::vector<CycloNum> coeffs_;
};

struct CycloRatFun {
  CycloPoly num;
  CycloPoly den;
};

/// Sum of expr(zeta) over all h complex h-th roots of unity, as a rational
/// function over Q. Roots are grouped by primitive order d | h; expr is called
/// once per d with a primitive d-th root and its Galois orbit is summed
/// exactly as a field trace. DivisionByZero if a returned denominator is 0.
RatFun cyclo_sum_over_roots(int h, const std::function<CycloRatFun(const CycloNum&)>& expr);

}  // namespace gaussq
