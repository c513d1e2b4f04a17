#pragma once

#include <map>
#include <utility>

#include "gaussq/poly.hpp"

namespace gaussq {

/// Sparse polynomial in (x, t) with exact rational coefficients.
/// Terms are keyed by (x exponent, t exponent) and iterate lexicographically;
/// zero coefficients are never stored.
class BiPoly {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Rational>;

  BiPoly() = default;

  static BiPoly constant(const Rational& c);
  static BiPoly monomial(const Rational& c, int ex, int et);
  static BiPoly from_x(const UniPoly& p);
  static BiPoly from_t(const UniPoly& p);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int ex, int et) const;
  int degree_x() const;
  int degree_t() const;
  bool has_integer_coefficients() const;

  // Coefficient of x^ex as a polynomial in t.
  UniPoly x_coefficient(int ex) const;
  // Coefficient of t^et as a polynomial in x.
  UniPoly t_coefficient(int et) const;

  void add_term(int ex, int et, const Rational& c);

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  BiPoly operator-() const;
  BiPoly pow(unsigned e) const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

inline BiPoly poly_mul(const BiPoly& a, const BiPoly& b) { return a * b; }

}  // namespace gaussq
