#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

#include "gaussq/errors.hpp"

namespace gaussq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial with exact rational coefficients.
///
/// coeffs()[i] is the coefficient of var^i. The highest stored coefficient is
/// always nonzero, so the zero polynomial stores nothing and has degree -1.
/// The variable tag only matters for printing and for catching accidental
/// products of polynomials in different variables.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(char var) : var_(var) {}
  UniPoly(std::vector<Rational> coeffs, char var = 'q');

  static UniPoly constant(const Rational& c, char var = 'q');
  static UniPoly monomial(const Rational& c, std::size_t exponent, char var = 'q');
  static UniPoly from_integers(std::span<const Integer> coeffs, char var = 'q');
  static UniPoly from_ints(std::initializer_list<long> coeffs, char var = 'q');

  char var() const { return var_; }
  UniPoly with_var(char var) const;

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  Rational coeff(long i) const;
  std::span<const Rational> coeffs() const { return coeffs_; }
  const Rational& leading() const;
  bool has_integer_coefficients() const;

  Rational operator()(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly shifted(std::size_t n) const;
  // p(var^s)
  UniPoly substitute_power(std::size_t s) const;
  UniPoly pow(unsigned e) const;
  UniPoly monic() const;
  // Scales so that the constant term is 1; requires a nonzero constant term.
  UniPoly unit_constant() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  UniPoly operator-() const;

  // Coefficient equality; the variable tag is not compared.
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::vector<Rational> coeffs_;
  char var_ = 'q';
};

inline UniPoly poly_mul(const UniPoly& a, const UniPoly& b) { return a * b; }

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

// Euclidean division over Q. Throws DivisionByZero for a zero divisor.
DivMod divmod(const UniPoly& num, const UniPoly& den);

class NonDivisible : public Error {
 public:
  explicit NonDivisible(UniPoly remainder);
  const UniPoly& remainder() const { return remainder_; }

 private:
  UniPoly remainder_;
};

// Quotient num/den, or NonDivisible carrying the remainder.
UniPoly poly_exact_div(const UniPoly& num, const UniPoly& den);

// Monic gcd; gcd(0, 0) is 0.
UniPoly poly_gcd(UniPoly a, UniPoly b);
// lcm normalized to constant term 1 when possible, otherwise monic.
UniPoly poly_lcm(const UniPoly& a, const UniPoly& b);

// Unique polynomial of degree < xs.size() through the points (xs[i], ys[i]).
UniPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys, char var);

}  // namespace gaussq
