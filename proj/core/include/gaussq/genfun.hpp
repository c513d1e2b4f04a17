#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gaussq/bipoly.hpp"
#include "gaussq/series.hpp"

namespace gaussq {

/// F_k(x,t) = sum f_{k,c}(a) x^a t^c or G_k(x,t) = sum g_{k,c}(a) x^a t^c.
enum class Which { F, G };

char which_name(Which w);
Which parse_which(std::string_view s);

// Coefficient of x^a t^c is f_{k,c}(a) (resp. g_{k,c}(a)) for a <= order.
// t_order < 0 keeps every c, which makes each x-coefficient exact.
XSeries series_FG(int k, Which which, long order, long t_order = -1);

/// The factor (1 - t^t_exp x^x_exp).
struct TFactor {
  int t_exp;
  int x_exp;
  auto operator<=>(const TFactor&) const = default;
};

/// prod_m Phi_m(x)^e_m times a list of (1 - t^i x^s) factors.
struct FactoredDenominator {
  std::map<int, int> cyclo;
  std::vector<TFactor> t_factors;  // kept sorted

  UniPoly x_part() const;
  BiPoly t_part() const;
  BiPoly expand() const;
  long x_degree() const;
  // lcm of the orders m of the cyclotomic factors (1 if there are none).
  long period() const;

  friend bool operator==(const FactoredDenominator&, const FactoredDenominator&) = default;
};

/// numerator / denominator with the denominator kept in factored form.
struct RatFun2 {
  BiPoly numerator;
  FactoredDenominator denominator;

  XSeries expand(long order) const;
  // Cross-multiplied identity N1 * D2 == N2 * D1.
  bool same_function(const RatFun2& other) const;
  // Specialization t = 0: every (1 - t^i x^s) factor becomes 1.
  RatFun2 at_t_zero() const;
};

std::string to_string(const FactoredDenominator& d);
// "(<numerator>) / (<factors>)", e.g. "(1 - x*t) / (Phi1^2*Phi3*(1 - x*t))".
std::string to_string(const RatFun2& r);

// Factor grammar: factors joined by '*', each either Phi<m>[^e] or
// (<polynomial in x,t>)[^e]. Polynomial factors in x alone are split into
// cyclotomic factors; factors involving t must have the shape 1 - x^s*t^i.
FactoredDenominator parse_denominator(std::string_view text);
RatFun2 parse_ratfun2(std::string_view text);

/// Bounds of the cyclotomic search space. Zero means the default:
/// m <= 2k + 1 and exponents <= k.
struct AnsatzBounds {
  int max_m = 0;
  int max_exponent = 0;
  // Largest m tried when recognizing a computed denominator.
  int recognition_limit = 64;
};

/// Candidate denominators for H_k: the mandatory t-factors
/// (1 - t x)...(1 - t^j x), j = floor(k/2), for even k, and
/// (1 - t x^2)(1 - t^3 x^2)...(1 - t^k x^2) for odd k, times any
/// prod Phi_m^e_m inside the bounds.
class DenominatorAnsatz {
 public:
  DenominatorAnsatz(int k, Which which, AnsatzBounds bounds = {});

  int k() const { return k_; }
  Which which() const { return which_; }
  const std::vector<TFactor>& t_factors() const { return t_factors_; }
  int max_m() const { return max_m_; }
  int max_exponent() const { return max_exponent_; }
  int recognition_limit() const { return recognition_limit_; }

  bool contains(const FactoredDenominator& d) const;
  // Every candidate whose cyclotomic part has degree <= max_x_degree, by
  // ascending degree (ties broken by the exponent map).
  std::vector<FactoredDenominator> enumerate(long max_x_degree) const;

 private:
  int k_;
  Which which_;
  int max_m_;
  int max_exponent_;
  int recognition_limit_;
  std::vector<TFactor> t_factors_;
};

DenominatorAnsatz denominator_ansatz(int k, Which which, AnsatzBounds bounds = {});

struct ReconstructOptions {
  // Series coefficients used for fitting; 0 picks 60 for k <= 6, else max(100, 14k).
  long order = 0;
  // Extra coefficients regenerated from the result and compared exactly.
  long margin = 20;
  AnsatzBounds bounds;
};

long default_reconstruction_order(int k);

/// Closed form of F_k or G_k. The cyclotomic part of the denominator is the
/// minimal D(x) making D(x) * prod(t-factors) * H_k a polynomial, found from
/// the minimal linear recurrences of the t-slices. Throws ReconstructionFailed
/// with a diagnostic when the truncation is too short, the denominator leaves
/// the ansatz, the numerator is not integral, or the margin check fails.
RatFun2 reconstruct(int k, Which which, const ReconstructOptions& options = {});

// Same, from precomputed data. The first fit_order + 1 coefficients are used
// for fitting and every coefficient of `series` for verification.
RatFun2 reconstruct_from_series(const DenominatorAnsatz& ansatz, const XSeries& series,
                                long fit_order);

struct LinearRecurrence {
  UniPoly connection;  // constant term 1
  long length;
};

// Shortest linear recurrence generating seq (Berlekamp-Massey over Q).
LinearRecurrence berlekamp_massey(std::span<const Rational> seq);

/// n -> components[n mod period](n) + (n < corrections.size() ? corrections[n] : 0).
/// The corrections come from the polynomial part of a generating function
/// whose numerator degree reaches the denominator degree.
struct Quasipoly {
  long period = 1;
  std::vector<UniPoly> components;
  std::vector<Rational> corrections;

  long degree() const;
  Rational operator()(long n) const;
};

// g_{k,c} (Which::G) or f_{k,c} (Which::F) as a quasipolynomial in a. Throws
// FitFailed if held-out values disagree even at period 2 lcm(1..k).
Quasipoly quasipoly_fit(int k, long c, Which which, const RatFun2& closed_form);
Quasipoly quasipoly_fit(int k, long c, Which which);

/// A stored closed form. Files are `key: value` lines with '#' comments:
///   name, numerator, denominator, slice (t=0), series (comma separated),
///   printed_numerator and printed_denominator (a flawed printed form kept
///   next to the corrected one).
struct Fixture {
  std::string name;
  bool t_zero_slice = false;
  std::optional<BiPoly> numerator;
  std::optional<FactoredDenominator> denominator;
  std::optional<BiPoly> printed_numerator;
  std::optional<FactoredDenominator> printed_denominator;
  std::vector<Integer> series;
};

Fixture parse_fixture(std::string_view text);
Fixture load_fixture(const std::string& path);

}  // namespace gaussq
