#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaussq/poly.hpp"

namespace gaussq {

/// alpha = u/v >= 0 in lowest terms together with k; beta = floor(alpha).
struct EulerFrobeniusQuery {
  Rational alpha;
  int k = 1;

  EulerFrobeniusQuery(Rational alpha, int k);
  Integer u() const { return alpha.get_num(); }
  Integer v() const { return alpha.get_den(); }
  long beta() const;
};

// C(alpha, k) = sum_{i=0}^{floor(alpha)} (-1)^i binom(k, i) (alpha - i)^(k-1), with 0^0 = 1.
Rational euler_frobenius(const Rational& alpha, int k);
Rational euler_frobenius(const EulerFrobeniusQuery& q);

// Number of permutations of 1..d with i - 1 descents; 0 outside 1 <= i <= max(d, 1).
Integer eulerian_number(int d, int i);
// sum_i A(d, i) x^i, so that sum_{n>=0} n^d x^n = A_d(x) / (1 - x)^(d+1). A_0 = 1.
UniPoly eulerian_poly(int d);

// Signed permutations of 1..d with i - 1 type-B descents; 0 outside 1 <= i <= d + 1.
Integer macmahon_number(int d, int i);

struct GeneulReport {
  int v = 1;
  int k = 1;
  long bound = 0;
  bool ok = true;
  // First failing exponent of the series identity, if any.
  std::optional<long> mismatch;
  // First failing j of v^(k-1) A(k-1, j) = [x^(v j)] RHS, if any.
  std::optional<long> corollary_mismatch;
  std::string detail;
};

// v^(k-1) sum_u C(u/v, k) x^u against (1 + x + ... + x^(v-1))^k A_{k-1}(x)
// for exponents u <= bound, plus the corollary at u = v j.
GeneulReport verify_geneul(int v, int k, long bound);

// Nonnegative (m_1..m_k) with m_1 + 2 m_2 + ... + k m_k = a beta and m_1 + ... + m_k <= a.
Integer lattice_slice_count(int k, long beta, long a);

}  // namespace gaussq
