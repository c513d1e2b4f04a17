#include "gaussq/eulerfrob.hpp"

#include <stdexcept>

namespace gaussq {

namespace {

Integer binomial(long n, long r) {
  if (r < 0 || r > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

Rational rational_pow(const Rational& base, long e) {
  Rational out = 1;
  for (long i = 0; i < e; ++i) out *= base;
  return out;
}

long floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

}  // namespace

EulerFrobeniusQuery::EulerFrobeniusQuery(Rational a, int kk) : alpha(std::move(a)), k(kk) {
  alpha.canonicalize();
  if (alpha < 0) throw std::invalid_argument("alpha must be nonnegative");
  if (k < 1) throw std::invalid_argument("k must be positive");
}

long EulerFrobeniusQuery::beta() const { return floor_of(alpha); }

Rational euler_frobenius(const Rational& alpha, int k) {
  return euler_frobenius(EulerFrobeniusQuery(alpha, k));
}

Rational euler_frobenius(const EulerFrobeniusQuery& q) {
  Rational sum = 0;
  const long beta = q.beta();
  for (long i = 0; i <= beta && i <= q.k; ++i) {
    const Rational term = binomial(q.k, i) * rational_pow(q.alpha - i, q.k - 1);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Integer eulerian_number(int d, int i) {
  if (d < 0 || i < 1 || i > std::max(d, 1)) return 0;
  // row[i] = A(n, i), A(n, i) = i A(n-1, i) + (n - i + 1) A(n-1, i-1)
  std::vector<Integer> row{0, 1};
  for (int n = 2; n <= d; ++n) {
    std::vector<Integer> next(static_cast<std::size_t>(n + 1));
    for (int j = 1; j <= n; ++j) {
      const Integer stay = j < static_cast<int>(row.size()) ? row[j] : Integer(0);
      next[j] = j * stay + (n - j + 1) * row[j - 1];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(i)];
}

UniPoly eulerian_poly(int d) {
  if (d < 0) throw std::invalid_argument("d must be nonnegative");
  if (d == 0) return UniPoly::constant(1, 'x');
  std::vector<Rational> c(static_cast<std::size_t>(d + 1));
  for (int i = 1; i <= d; ++i) c[i] = eulerian_number(d, i);
  return UniPoly(std::move(c), 'x');
}

Integer macmahon_number(int d, int i) {
  if (d < 0 || i < 1 || i > d + 1) return 0;
  // row[j] = number with j descents; B(n, j) = (2j+1) B(n-1, j) + (2n-2j+1) B(n-1, j-1)
  std::vector<Integer> row{1};
  for (int n = 1; n <= d; ++n) {
    std::vector<Integer> next(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) {
      if (j < n) next[j] += (2 * j + 1) * row[j];
      if (j > 0) next[j] += (2 * n - 2 * j + 1) * row[j - 1];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(i - 1)];
}

GeneulReport verify_geneul(int v, int k, long bound) {
  if (v < 1 || k < 1) throw std::invalid_argument("v and k must be positive");
  GeneulReport rep;
  rep.v = v;
  rep.k = k;
  rep.bound = bound;
  const UniPoly block(std::vector<Rational>(static_cast<std::size_t>(v), Rational(1)), 'x');
  const UniPoly rhs = block.pow(static_cast<unsigned>(k)) * eulerian_poly(k - 1);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(v), static_cast<unsigned long>(k - 1));
  for (long u = 0; u <= bound; ++u) {
    const Rational lhs = scale * euler_frobenius(Rational(u, v), k);
    if (lhs != rhs.coeff(u)) {
      rep.ok = false;
      rep.mismatch = u;
      rep.detail = "coefficient of x^" + std::to_string(u) + " differs";
      break;
    }
  }
  // A_0 = 1 sits at x^0 rather than x^1, so the corollary starts at k = 2.
  for (long j = 0; k >= 2 && v * j <= bound; ++j) {
    if (scale * eulerian_number(k - 1, static_cast<int>(j)) != rhs.coeff(v * j)) {
      rep.ok = false;
      rep.corollary_mismatch = j;
      if (rep.detail.empty()) rep.detail = "corollary fails at j=" + std::to_string(j);
      break;
    }
  }
  return rep;
}

Integer lattice_slice_count(int k, long beta, long a) {
  if (k < 1 || beta < 0 || a < 0) return 0;
  const long target = a * beta;
  const auto width = static_cast<std::size_t>(target + 1);
  // dp[n * width + s]: choices for m_1..m_i using n parts in total with weighted sum s.
  std::vector<Integer> dp(static_cast<std::size_t>(a + 1) * width);
  dp[0] = 1;
  for (long i = 1; i <= k; ++i) {
    std::vector<Integer> next(dp.size());
    for (long n = 0; n <= a; ++n) {
      for (long s = 0; s <= target; ++s) {
        const Integer& here = dp[n * width + s];
        if (here == 0) continue;
        for (long m = 0; n + m <= a && s + i * m <= target; ++m) {
          next[(n + m) * width + s + i * m] += here;
        }
      }
    }
    dp = std::move(next);
  }
  Integer total = 0;
  for (long n = 0; n <= a; ++n) total += dp[n * width + target];
  return total;
}

}  // namespace gaussq
