#pragma once

#include "gaussq/series.hpp"

namespace gaussq {

/// Parameters of a dissection sum_{a>=0} [q^(a j - c)] q^(a i) F(q) x^a.
struct DissectionSpec {
  long i = 0;
  long j = 1;
  long c = 0;
  long order = 0;  // last x exponent produced

  long h() const { return j - i; }
  // Throws std::invalid_argument unless j > i >= 0 and order >= 0.
  void validate() const;
};

// Coefficient n of the result is [q^(h n)] G, for 0 <= n <= order.
// InsufficientTruncation if G is known to less than h * order.
TruncSeries dissect_series(const TruncSeries& g, long h, long order);

// Expands F to order j*order and reads [q^(a j - c)] q^(a i) F(q) directly.
TruncSeries lemma_a_direct(const RatFun& f, const DissectionSpec& spec);

// Evaluates (1/h) sum_{zeta^h = 1} (zeta x)^c F(zeta x) exactly over the
// cyclotomic fields, expands it, checks that only exponents divisible by h
// survive and substitutes x -> x^(1/h). Negative exponents are dropped.
TruncSeries lemma_a_roots(const RatFun& f, const DissectionSpec& spec);

// sum_{a>=0} sum_{c=0..t_order} [q^(a j - c)] q^(a i) F(q) x^a t^c, computed as
// the h-th dissection of F(q) / (1 - q t).
XSeries lemma_b(const RatFun& f, long i, long j, long order, long t_order);

}  // namespace gaussq
