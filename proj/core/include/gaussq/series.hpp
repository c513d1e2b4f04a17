#pragma once

#include <vector>

#include "gaussq/bipoly.hpp"
#include "gaussq/poly.hpp"

namespace gaussq {

/// Power series in one variable known through x^order inclusive.
class TruncSeries {
 public:
  explicit TruncSeries(long order = 0, char var = 'q');
  TruncSeries(std::vector<Rational> coeffs, char var);
  static TruncSeries from_poly(const UniPoly& p, long order);

  long order() const { return static_cast<long>(coeffs_.size()) - 1; }
  char var() const { return var_; }
  // Coefficients below zero are 0; reading past the order throws InsufficientTruncation.
  Rational coeff(long n) const;
  std::span<const Rational> coeffs() const { return coeffs_; }
  void set(long n, Rational v);
  bool is_zero() const;
  UniPoly to_poly() const { return UniPoly(coeffs_, var_); }
  TruncSeries truncated(long order) const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Rational& c);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
  char var_;
};

/// Rational function num/den in one variable.
struct RatFun {
  UniPoly num;
  UniPoly den;

  // Power-series expansion at 0 through the given order, via the linear
  // recurrence defined by the denominator. NotExpandable if den(0) == 0.
  TruncSeries expand(long order) const;

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  RatFun scaled(const Rational& c) const { return {num * c, den}; }
};

/// Series in x through x^order whose coefficients are polynomials in t.
class XSeries {
 public:
  explicit XSeries(long order = 0);
  static XSeries from_bipoly(const BiPoly& p, long order);

  long order() const { return static_cast<long>(coeffs_.size()) - 1; }
  const UniPoly& coeff(long a) const;
  Rational coeff(long a, long c) const { return coeff(a).coeff(c); }
  void set(long a, UniPoly t_poly);
  int t_degree() const;
  bool is_zero() const;

  XSeries truncated(long order) const;
  // Coefficient of t^c, as a series in x.
  TruncSeries t_slice(long c) const;
  BiPoly to_bipoly() const;

  XSeries times(const BiPoly& p) const;
  XSeries times_x(const UniPoly& p) const;
  // Exact series quotient; the x^0 part of p must be a nonzero constant.
  XSeries divided_by(const BiPoly& p) const;

  friend XSeries operator-(const XSeries& a, const XSeries& b);
  friend bool operator==(const XSeries& a, const XSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<UniPoly> coeffs_;
};

}  // namespace gaussq
