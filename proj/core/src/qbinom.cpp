#include "gaussq/qbinom.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gaussq {

namespace {

long floor_product(const Rational& alpha, long a) {
  if (alpha < 0) throw std::invalid_argument("alpha must be nonnegative");
  const Rational prod = alpha * a;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), prod.get_num_mpz_t(), prod.get_den_mpz_t());
  if (!q.fits_slong_p()) throw std::out_of_range("exponent does not fit in a long");
  return q.get_si();
}

void check_k(int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
}

}  // namespace

long CoeffQuery::target_exponent() const {
  if (!alpha) return middle() - c;
  return floor_product(*alpha, a) - c;
}

std::vector<Integer> qbinomial_coefficients(long a, int k) {
  check_k(k);
  if (a < 0) throw std::invalid_argument("a must be nonnegative");
  std::vector<Integer> p{1};
  for (long i = 1; i <= k; ++i) {
    // times (1 - q^(a+i))
    const std::size_t shift = static_cast<std::size_t>(a + i);
    std::vector<Integer> next(p.size() + shift);
    for (std::size_t n = 0; n < p.size(); ++n) {
      next[n] += p[n];
      next[n + shift] -= p[n];
    }
    // divided by (1 - q^i): r[n] = next[n] + r[n - i]
    const std::size_t step = static_cast<std::size_t>(i);
    for (std::size_t n = step; n < next.size(); ++n) next[n] += next[n - step];
    const std::size_t keep = next.size() - step;
    for (std::size_t n = keep; n < next.size(); ++n) {
      if (next[n] != 0) throw NonDivisible(UniPoly::from_integers(next, 'q'));
    }
    next.resize(keep);
    p = std::move(next);
  }
  return p;
}

UniPoly qbinomial(long a, int k) { return UniPoly::from_integers(qbinomial_coefficients(a, k), 'q'); }

Integer partition_count_box(long n, long rows, long cols) {
  if (n < 0 || rows < 0 || cols < 0) return 0;
  if (n == 0) return 1;
  rows = std::min(rows, n);
  cols = std::min(cols, n);
  const auto width = static_cast<std::size_t>(n + 1);
  // ways[j * width + s]: multisets of parts seen so far with j parts summing to s.
  std::vector<Integer> ways(static_cast<std::size_t>(rows + 1) * width);
  ways[0] = 1;
  for (long part = 1; part <= cols; ++part) {
    for (long j = 1; j <= rows; ++j) {
      for (long s = part; s <= n; ++s) {
        ways[j * width + s] += ways[(j - 1) * width + (s - part)];
      }
    }
  }
  Integer total = 0;
  for (long j = 0; j <= rows; ++j) total += ways[j * width + n];
  return total;
}

namespace {

Integer coefficient_or_zero(const std::vector<Integer>& coeffs, long n) {
  if (n < 0 || n >= static_cast<long>(coeffs.size())) return 0;
  return coeffs[static_cast<std::size_t>(n)];
}

}  // namespace

Integer g_coeff(int k, long c, long a) {
  const auto coeffs = qbinomial_coefficients(a, k);
  return coefficient_or_zero(coeffs, a * k / 2 - c);
}

Integer f_coeff(int k, long c, long a) {
  const auto coeffs = qbinomial_coefficients(a, k);
  const long m = a * k / 2;
  return coefficient_or_zero(coeffs, m - c) - coefficient_or_zero(coeffs, m - c - 1);
}

Integer coeff_at(int k, long a, const Rational& alpha, long c) {
  const auto coeffs = qbinomial_coefficients(a, k);
  return coefficient_or_zero(coeffs, floor_product(alpha, a) - c);
}

Integer coeff(const CoeffQuery& query) {
  const auto coeffs = qbinomial_coefficients(query.a, query.k);
  return coefficient_or_zero(coeffs, query.target_exponent());
}

std::vector<UniPoly> subset_sum_polys(int k) {
  check_k(k);
  std::vector<UniPoly> p(static_cast<std::size_t>(k + 1), UniPoly('q'));
  p[0] = UniPoly::constant(1, 'q');
  for (int l = 1; l <= k; ++l) {
    for (int i = l; i >= 1; --i) p[i] += p[i - 1].shifted(static_cast<std::size_t>(l));
  }
  return p;
}

FixedKCoefficients::FixedKCoefficients(int k, long max_exponent) : k_(k) {
  check_k(k);
  if (max_exponent < 0) throw std::invalid_argument("max_exponent must be nonnegative");
  for (const auto& poly : subset_sum_polys(k)) {
    std::vector<std::pair<long, Integer>> terms;
    for (long e = 0; e <= poly.degree(); ++e) {
      if (poly.coeff(e) != 0) terms.emplace_back(e, poly.coeff(e).get_num());
    }
    p_terms_.push_back(std::move(terms));
  }
  partitions_.assign(static_cast<std::size_t>(max_exponent + 1), Integer(0));
  partitions_[0] = 1;
  for (long part = 1; part <= k; ++part) {
    for (long n = part; n <= max_exponent; ++n) partitions_[n] += partitions_[n - part];
  }
}

Integer FixedKCoefficients::coefficient(long a, long n) const {
  if (a < 0) throw std::invalid_argument("a must be nonnegative");
  if (n < 0 || n > a * k_) return 0;
  if (n > max_exponent()) {
    throw InsufficientTruncation("exponent " + std::to_string(n) + " exceeds table size " +
                                 std::to_string(max_exponent()));
  }
  Integer acc = 0;
  for (long i = 0; i <= k_; ++i) {
    const long base = n - a * i;
    if (base < 0) break;
    const auto& terms = p_terms_[static_cast<std::size_t>(i)];
    for (const auto& [e, c] : terms) {
      const long idx = base - e;
      if (idx < 0) break;
      if (i % 2 == 0) {
        acc += c * partitions_[static_cast<std::size_t>(idx)];
      } else {
        acc -= c * partitions_[static_cast<std::size_t>(idx)];
      }
    }
  }
  return acc;
}

Integer FixedKCoefficients::g(long c, long a) const { return coefficient(a, a * k_ / 2 - c); }

Integer FixedKCoefficients::f(long c, long a) const {
  const long m = a * k_ / 2;
  return coefficient(a, m - c) - coefficient(a, m - c - 1);
}

Integer FixedKCoefficients::at(const Rational& alpha, long a, long c) const {
  return coefficient(a, floor_product(alpha, a) - c);
}

}  // namespace gaussq
