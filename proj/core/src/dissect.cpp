#include "gaussq/dissect.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gaussq/cyclotomic.hpp"

namespace gaussq {

void DissectionSpec::validate() const {
  if (i < 0 || j <= i) throw std::invalid_argument("dissection requires j > i >= 0");
  if (order < 0) throw std::invalid_argument("dissection order must be nonnegative");
}

TruncSeries dissect_series(const TruncSeries& g, long h, long order) {
  if (h < 1) throw std::invalid_argument("dissection step must be positive");
  if (order < 0) throw std::invalid_argument("dissection order must be nonnegative");
  if (g.order() < h * order) {
    throw InsufficientTruncation("series known to order " + std::to_string(g.order()) +
                                 ", dissection needs " + std::to_string(h * order));
  }
  TruncSeries out(order, 'x');
  for (long n = 0; n <= order; ++n) out.set(n, g.coeff(h * n));
  return out;
}

TruncSeries lemma_a_direct(const RatFun& f, const DissectionSpec& spec) {
  spec.validate();
  const long top = spec.j * spec.order - spec.c;
  const TruncSeries qf = f.expand(std::max(top, 0L));
  TruncSeries out(spec.order, 'x');
  for (long a = 0; a <= spec.order; ++a) {
    // [q^(a j - c)] q^(a i) F(q) = [q^(a j - c - a i)] F(q)
    out.set(a, qf.coeff(a * spec.j - spec.c - a * spec.i));
  }
  return out;
}

TruncSeries lemma_a_roots(const RatFun& f, const DissectionSpec& spec) {
  spec.validate();
  const long h = spec.h();
  const long c = spec.c;
  TruncSeries out(spec.order, 'x');
  if (f.num.is_zero()) return out;
  if (f.den.coeff(0) == 0) throw NotExpandable("denominator vanishes at 0");

  const UniPoly num = f.num.with_var('x');
  const UniPoly den = f.den.with_var('x');
  // x^c is common to every root, so sum zeta^c F(zeta x) and shift afterwards.
  const RatFun summed = cyclo_sum_over_roots(static_cast<int>(h), [&](const CycloNum& zeta) {
    return CycloRatFun{CycloPoly::scaled(num, zeta) * zeta.pow(c), CycloPoly::scaled(den, zeta)};
  });

  // Exponent e of x^c * summed(x) corresponds to index e - c of the expansion.
  const long last = h * spec.order - c;
  if (last < 0) return out;
  const TruncSeries expanded = summed.expand(last);
  for (long n = 0; n <= last; ++n) {
    const long e = n + c;
    const Rational& v = expanded.coeffs()[static_cast<std::size_t>(n)];
    if (v == 0) continue;
    if (e % h != 0) {
      throw NonDissectibleResidue("root-of-unity average left exponent " + std::to_string(e) +
                                  " not divisible by " + std::to_string(h));
    }
    if (e >= 0) out.set(e / h, v / h);
  }
  return out;
}

XSeries lemma_b(const RatFun& f, long i, long j, long order, long t_order) {
  DissectionSpec spec{i, j, 0, order};
  spec.validate();
  if (t_order < 0) throw std::invalid_argument("t_order must be nonnegative");
  const long h = spec.h();
  // [q^(a j - c)] q^(a i) F = [q^(a h)] q^c F, and sum_c q^c t^c F = F / (1 - q t).
  // The q-series is held in an XSeries (its "x" playing the role of q).
  const long top = h * order;
  const TruncSeries qf = f.expand(top);
  XSeries fq(top);
  for (long n = 0; n <= top; ++n) fq.set(n, UniPoly::constant(qf.coeff(n), 't'));
  BiPoly one_minus_qt = BiPoly::constant(1);
  one_minus_qt.add_term(1, 1, -1);
  const XSeries bivariate = fq.divided_by(one_minus_qt);

  XSeries out(order);
  for (long a = 0; a <= order; ++a) {
    const UniPoly& full = bivariate.coeff(a * h);
    std::vector<Rational> tc(full.coeffs().begin(),
                             full.coeffs().begin() + std::min<long>(full.size(), t_order + 1));
    out.set(a, UniPoly(std::move(tc), 't'));
  }
  return out;
}

}  // namespace gaussq
