#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaussq/poly.hpp"

namespace gaussq {

// C(alpha, k) a^(k-1) / ((k-1)! k!).
Rational predict_coeff(const Rational& alpha, int k, long a);

// D(k) = 1/2 sum_{i=0}^{j-1} (-1)^(i+1) binom(k, i) (j - i)^(k-3), j = k/2.
// InvalidK unless k is even and k >= 6 (the formula fails at k = 4).
Rational d_constant(int k);

// (2c + 1) D(k) a^(k-3) / ((k-3)! k!).
Rational predict_diff(int k, long c, long a);

// (2c + 1 + 3 (-1)^c) a / 24, the k = 4 difference.
Rational predict_diff_k4(long c, long a);

enum class AsymMode { Coeff, Diff, DiffK4 };
enum class Verdict { Consistent, Inconsistent, Inconclusive, NoPrediction };

std::string mode_name(AsymMode m);
std::string verdict_name(Verdict v);

struct ReportParams {
  AsymMode mode = AsymMode::Coeff;
  int k = 4;
  // Coeff mode only; unset means the middle, alpha = k/2.
  std::optional<Rational> alpha;
  long c = 0;
};

struct Tolerances {
  double coeff_small_k = 0.02;  // k <= 4
  double coeff = 0.05;
  double diff = 0.05;
  // Normalized residuals in the second half of the rows may exceed the
  // first-half maximum by this factor.
  double growth_factor = 1.5;
  // Additive slack on the bounded-residual check of the k = 4 difference.
  double k4_slack = 2.0;
};

struct ReportRow {
  long a = 0;
  Integer exact;
  std::optional<Rational> predicted;
  std::optional<Rational> ratio;  // only when the prediction is nonzero
  std::optional<Rational> residual;
  std::optional<Rational> normalized_residual;
};

struct ConvergenceReport {
  ReportParams params;
  long next_order = 0;  // residuals are divided by a^next_order
  std::vector<ReportRow> rows;
  Verdict verdict = Verdict::Inconclusive;
  bool ratio_ok = false;
  bool residuals_bounded = false;
  std::string note;
};

// Exact value for one row: the coefficient of q^(floor(alpha a) - c) in Coeff
// mode, f_{k,c}(a) in the difference modes.
Integer exact_value(const ReportParams& p, long a);

// a values must be positive and strictly increasing.
ConvergenceReport convergence_report(const ReportParams& params, std::span<const long> a_values,
                                     const Tolerances& tol = {});

// `steps` values from amin to amax inclusive, evenly spaced and deduplicated.
std::vector<long> a_grid(long amin, long amax, long steps);

// 12 significant digits.
std::string decimal(const Rational& r);

std::string to_csv(const ConvergenceReport& r);
std::string to_json(const ConvergenceReport& r);

}  // namespace gaussq
