#pragma once

#include <optional>
#include <vector>

#include "gaussq/poly.hpp"

namespace gaussq {

/// A coefficient query against the Gaussian polynomial of (a + k choose k)_q:
/// the coefficient of q^(floor(alpha * a) - c). With alpha unset the exponent
/// is floor(a k / 2) - c, i.e. distance c below the (smaller) middle degree.
struct CoeffQuery {
  int k = 1;
  long a = 0;
  long c = 0;
  std::optional<Rational> alpha;

  long middle() const { return a * k / 2; }
  long target_exponent() const;
};

// Coefficients of (a + k choose k)_q, index = exponent of q. Length a k + 1.
std::vector<Integer> qbinomial_coefficients(long a, int k);

// prod_{i=1..k} (1 - q^(a+i)) / prod_{i=1..k} (1 - q^i) as an exact polynomial.
UniPoly qbinomial(long a, int k);

// Number of partitions of n with at most `rows` parts, each at most `cols`.
Integer partition_count_box(long n, long rows, long cols);

// g_{k,c}(a) = [q^(m - c)] (a + k choose k)_q with m = floor(a k / 2); 0 out of range.
Integer g_coeff(int k, long c, long a);
// f_{k,c}(a) = g_{k,c}(a) - g_{k,c+1}(a).
Integer f_coeff(int k, long c, long a);
// [q^(floor(alpha a) - c)] (a + k choose k)_q; 0 out of range. alpha >= 0.
Integer coeff_at(int k, long a, const Rational& alpha, long c);
Integer coeff(const CoeffQuery& query);

/// P_0..P_k with prod_{i=1..k} (1 - q^i z) = sum_i (-1)^i P_i(q) z^i.
/// P_i(q) is the sum of q^(sum S) over i-element subsets S of {1..k}.
std::vector<UniPoly> subset_sum_polys(int k);

/// Fast single-coefficient access for a fixed k:
///   [q^n] (a + k choose k)_q = sum_i (-1)^i [q^(n - a i)] P_i(q) / [k]!
/// where 1/[k]! = prod_{i<=k} 1/(1 - q^i) is tabulated once up to max_exponent.
/// Immutable after construction.
class FixedKCoefficients {
 public:
  FixedKCoefficients(int k, long max_exponent);

  int k() const { return k_; }
  long max_exponent() const { return static_cast<long>(partitions_.size()) - 1; }

  // [q^n] (a + k choose k)_q. n beyond max_exponent throws InsufficientTruncation
  // unless the coefficient is trivially zero (n > a k).
  Integer coefficient(long a, long n) const;
  Integer g(long c, long a) const;
  Integer f(long c, long a) const;
  Integer at(const Rational& alpha, long a, long c) const;

 private:
  int k_;
  // subset_sum_polys(k) as sparse integer term lists.
  std::vector<std::vector<std::pair<long, Integer>>> p_terms_;
  // Number of partitions of n into parts of size <= k.
  std::vector<Integer> partitions_;
};

}  // namespace gaussq
