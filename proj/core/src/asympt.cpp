#include "gaussq/asympt.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "gaussq/errors.hpp"
#include "gaussq/eulerfrob.hpp"
#include "gaussq/qbinom.hpp"
#include "gaussq/text.hpp"

namespace gaussq {

namespace {

Integer factorial(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

// a^e for any integer e (a > 0 when e < 0).
Rational power(long a, long e) {
  Rational out = 1;
  for (long i = 0; i < std::abs(e); ++i) out *= a;
  return e >= 0 ? out : Rational(1) / out;
}

Rational abs_value(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Rational middle_alpha(int k) {
  Rational out(k, 2);
  out.canonicalize();
  return out;
}

}  // namespace

Rational predict_coeff(const Rational& alpha, int k, long a) {
  return euler_frobenius(alpha, k) * power(a, k - 1) / Rational(factorial(k - 1) * factorial(k));
}

Rational d_constant(int k) {
  if (k % 2 != 0 || k < 6) {
    throw InvalidK("difference constant needs even k >= 6, got k=" + std::to_string(k) +
                   (k == 4 ? " (k=4 follows a separate formula)" : ""));
  }
  const long j = k / 2;
  Rational sum = 0;
  for (long i = 0; i < j; ++i) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(i));
    const Rational term = b * power(j - i, k - 3);
    if (i % 2 == 0) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum / 2;
}

Rational predict_diff(int k, long c, long a) {
  return (2 * c + 1) * d_constant(k) * power(a, k - 3) / Rational(factorial(k - 3) * factorial(k));
}

Rational predict_diff_k4(long c, long a) {
  const long sign = c % 2 == 0 ? 1 : -1;
  Rational out((2 * c + 1 + 3 * sign) * a, 24);
  out.canonicalize();
  return out;
}

std::string mode_name(AsymMode m) {
  switch (m) {
    case AsymMode::Coeff: return "coeff";
    case AsymMode::Diff: return "diff";
    case AsymMode::DiffK4: return "diff_k4";
  }
  return "?";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "consistent";
    case Verdict::Inconsistent: return "inconsistent";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::NoPrediction: return "no prediction available";
  }
  return "?";
}

Integer exact_value(const ReportParams& p, long a) {
  const auto coeffs = qbinomial_coefficients(a, p.k);
  auto at = [&](long n) -> Integer {
    if (n < 0 || n >= static_cast<long>(coeffs.size())) return 0;
    return coeffs[static_cast<std::size_t>(n)];
  };
  if (p.mode == AsymMode::Coeff) {
    if (!p.alpha) return at(a * p.k / 2 - p.c);
    CoeffQuery q{p.k, a, p.c, p.alpha};
    return at(q.target_exponent());
  }
  const long m = a * p.k / 2;
  return at(m - p.c) - at(m - p.c - 1);
}

namespace {

std::optional<Rational> prediction(const ReportParams& p, long a) {
  switch (p.mode) {
    case AsymMode::Coeff:
      return predict_coeff(p.alpha ? *p.alpha : middle_alpha(p.k), p.k, a);
    case AsymMode::Diff:
      if (p.k % 2 != 0 || p.k < 6) return std::nullopt;
      return predict_diff(p.k, p.c, a);
    case AsymMode::DiffK4:
      if (p.k != 4) return std::nullopt;
      return predict_diff_k4(p.c, a);
  }
  return std::nullopt;
}

long next_order(const ReportParams& p) {
  switch (p.mode) {
    case AsymMode::Coeff: return p.k - 2;
    case AsymMode::Diff: return p.k - 4;
    case AsymMode::DiffK4: return 0;
  }
  return 0;
}

}  // namespace

ConvergenceReport convergence_report(const ReportParams& params, std::span<const long> a_values,
                                     const Tolerances& tol) {
  if (params.k < 1) throw std::invalid_argument("k must be positive");
  if (params.alpha && *params.alpha < 0) throw std::invalid_argument("alpha must be nonnegative");
  for (std::size_t i = 0; i < a_values.size(); ++i) {
    if (a_values[i] < 1) throw std::invalid_argument("a values must be positive");
    if (i > 0 && a_values[i] <= a_values[i - 1]) throw std::invalid_argument("a values must increase");
  }
  ConvergenceReport rep;
  rep.params = params;
  rep.next_order = next_order(params);
  for (long a : a_values) {
    ReportRow row;
    row.a = a;
    row.exact = exact_value(params, a);
    row.predicted = prediction(params, a);
    if (row.predicted) {
      if (*row.predicted != 0) row.ratio = Rational(row.exact) / *row.predicted;
      row.residual = Rational(row.exact) - *row.predicted;
      row.normalized_residual = *row.residual / power(a, rep.next_order);
    }
    rep.rows.push_back(std::move(row));
  }

  if (rep.rows.empty() || !rep.rows.front().predicted) {
    rep.verdict = rep.rows.empty() ? Verdict::Inconclusive : Verdict::NoPrediction;
    rep.note = rep.rows.empty() ? "no rows" : "exact values only";
    return rep;
  }
  if (rep.rows.size() < 4) {
    rep.verdict = Verdict::Inconclusive;
    rep.note = "fewer than 4 rows";
    return rep;
  }

  double ratio_tol = tol.diff;
  if (params.mode == AsymMode::Coeff) ratio_tol = params.k <= 4 ? tol.coeff_small_k : tol.coeff;
  const ReportRow& last = rep.rows.back();
  if (last.ratio) {
    rep.ratio_ok = std::fabs(last.ratio->get_d() - 1.0) <= ratio_tol;
  } else {
    // Zero leading prediction: only boundedness can be judged.
    rep.ratio_ok = true;
    rep.note = "prediction is 0";
  }

  // Compare the second half of the rows against the first half.
  const std::size_t half = rep.rows.size() / 2;
  Rational early_max = 0, late_max = 0;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const Rational v = abs_value(*rep.rows[i].normalized_residual);
    if (i < half) {
      early_max = std::max(early_max, v);
    } else {
      late_max = std::max(late_max, v);
    }
  }
  const bool k4 = params.mode == AsymMode::DiffK4;
  const double factor = k4 ? 1.0 : tol.growth_factor;
  const double slack = k4 ? tol.k4_slack : 0.0;
  rep.residuals_bounded = late_max.get_d() <= factor * early_max.get_d() + slack + 1e-12;

  rep.verdict = rep.ratio_ok && rep.residuals_bounded ? Verdict::Consistent : Verdict::Inconsistent;
  return rep;
}

std::vector<long> a_grid(long amin, long amax, long steps) {
  if (amin < 1 || amax < amin) throw std::invalid_argument("need 1 <= amin <= amax");
  if (steps < 1) throw std::invalid_argument("steps must be positive");
  std::vector<long> out;
  if (steps == 1 || amin == amax) return {amax};
  for (long i = 0; i < steps; ++i) {
    const long a = amin + (amax - amin) * i / (steps - 1);
    if (out.empty() || out.back() != a) out.push_back(a);
  }
  return out;
}

std::string decimal(const Rational& r) {
  mpf_class f(0, 256);
  f = r;
  char buf[64];
  gmp_snprintf(buf, sizeof buf, "%.12Fg", f.get_mpf_t());
  return buf;
}

namespace {

std::string opt_exact(const std::optional<Rational>& r) { return r ? to_string(*r) : ""; }
std::string opt_decimal(const std::optional<Rational>& r) { return r ? decimal(*r) : ""; }

}  // namespace

std::string to_csv(const ConvergenceReport& r) {
  std::ostringstream out;
  out << "a,exact,predicted,predicted_decimal,ratio,ratio_decimal,residual,residual_decimal,"
         "normalized_residual,normalized_residual_decimal\n";
  for (const auto& row : r.rows) {
    out << row.a << ',' << row.exact.get_str() << ',' << opt_exact(row.predicted) << ','
        << opt_decimal(row.predicted) << ',' << opt_exact(row.ratio) << ',' << opt_decimal(row.ratio)
        << ',' << opt_exact(row.residual) << ',' << opt_decimal(row.residual) << ','
        << opt_exact(row.normalized_residual) << ',' << opt_decimal(row.normalized_residual) << '\n';
  }
  return out.str();
}

std::string to_json(const ConvergenceReport& r) {
  using nlohmann::json;
  auto field = [](const std::optional<Rational>& v) -> json {
    if (!v) return nullptr;
    return json{{"exact", to_string(*v)}, {"decimal", decimal(*v)}};
  };
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"a", row.a},
                    {"exact", row.exact.get_str()},
                    {"predicted", field(row.predicted)},
                    {"ratio", field(row.ratio)},
                    {"residual", field(row.residual)},
                    {"normalized_residual", field(row.normalized_residual)}});
  }
  json doc{{"mode", mode_name(r.params.mode)},
           {"k", r.params.k},
           {"alpha", r.params.alpha ? json(to_string(*r.params.alpha)) : json(nullptr)},
           {"c", r.params.c},
           {"next_order", r.next_order},
           {"verdict", verdict_name(r.verdict)},
           {"ratio_ok", r.ratio_ok},
           {"residuals_bounded", r.residuals_bounded},
           {"note", r.note},
           {"rows", rows}};
  return doc.dump(2) + "\n";
}

}  // namespace gaussq
