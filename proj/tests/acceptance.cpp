// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "gaussq/gaussq.hpp"
#include "oracles.hpp"

using namespace gaussq;

namespace {

// Tolerances and ranges, pinned.
constexpr double kCoeffTol = 0.05;
constexpr double kCoeffTolK4 = 0.02;
constexpr double kDiffTol = 0.05;
constexpr double kDecayFactor = 5.0;
constexpr double kK4Slack = 2.0;
constexpr long kTheorem2A = 2000;
constexpr long kTheorem3A = 800;
constexpr int kHeldOut = 50;
constexpr long kHeldOutMax = 500;
constexpr std::uint64_t kSeed = 20261016;

std::string fixture_dir() {
  const char* env = std::getenv("GAUSSQ_FIXTURES");
  return env ? env : GAUSSQ_FIXTURE_DIR;
}

Fixture fixture(const std::string& name) { return load_fixture(fixture_dir() + "/" + name + ".txt"); }

int failures = 0;

// check returns "" on success or a failure description; `note` is appended either way.
void criterion(int n, const std::string& title, const std::function<std::string(std::string&)>& check) {
  const auto start = std::chrono::steady_clock::now();
  std::string note, failure;
  try {
    failure = check(note);
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << "criterion " << n << " [" << title << "]: " << (failure.empty() ? "PASS" : "FAIL");
  if (!failure.empty()) line << " (" << failure << ")";
  if (!note.empty()) line << " (" << note << ")";
  line << " " << secs << "s";
  std::cout << line.str() << std::endl;
  if (!failure.empty()) ++failures;
}

RatFun inverse_q_factorial(int k) {
  UniPoly den = UniPoly::constant(1);
  for (int i = 1; i <= k; ++i) den *= UniPoly::constant(1) - UniPoly::monomial(1, static_cast<std::size_t>(i));
  return {UniPoly::constant(1), den};
}

double ratio(const Integer& exact, const Rational& predicted) { return Rational(Rational(exact) / predicted).get_d(); }

}  // namespace

int main() {
  criterion(1, "reference closed forms", [](std::string& note) -> std::string {
    for (const char* name : {"F3", "G3", "F4", "G4", "F6", "G6"}) {
      const Fixture fx = fixture(name);
      const RatFun2 ours = reconstruct(name[1] - '0', parse_which(std::string(1, name[0])));
      if (!ours.same_function({*fx.numerator, *fx.denominator})) return std::string(name) + " differs";
    }
    // The printed F6 numerator is kept verbatim; its printed denominator is
    // refuted by the coefficients themselves.
    const Fixture f6 = fixture("F6");
    const RatFun2 ours6 = reconstruct(6, Which::F);
    if (!(ours6.numerator == *f6.numerator)) return "F6 numerator differs from the printed one";
    const XSeries printed = RatFun2{*f6.numerator, *f6.printed_denominator}.expand(1);
    if (printed.coeff(1) == series_FG(6, Which::F, 1).coeff(1)) return "printed F6 denominator unexpectedly consistent";
    for (const char* name : {"F8", "G8"}) {
      const Fixture fx = fixture(name);
      const RatFun2 ours = reconstruct(8, parse_which(std::string(1, name[0])));
      if (!(ours.denominator == *fx.denominator)) return std::string(name) + " denominator " + to_string(ours.denominator);
    }
    note = "F6 uses Phi2^3; the printed Phi2^2 gives " + to_string(printed.coeff(1)) + " at x^1 against t^3";
    return "";
  });

  criterion(2, "F8(x,0) series", [](std::string&) -> std::string {
    const std::vector<long> expected{1, 0, 1, 1, 2, 2, 4, 4, 7, 8, 12};
    const XSeries s = reconstruct(8, Which::F).at_t_zero().expand(10);
    for (long a = 0; a <= 10; ++a) {
      if (s.coeff(a, 0) != expected[a]) return "closed form at x^" + std::to_string(a);
      if (f_coeff(8, 0, a) != expected[a]) return "direct coefficient at x^" + std::to_string(a);
    }
    return "";
  });

  criterion(3, "qbinomial = box partitions", [](std::string& note) -> std::string {
    long checked = 0;
    for (int k = 0; k <= 8; ++k)
      for (int a = 0; a <= 12; ++a) {
        const auto c = qbinomial_coefficients(a, k);
        const auto brute = oracle::box_partitions(a, k);
        for (long n = 0; n <= static_cast<long>(a) * k; ++n, ++checked) {
          if (c[n] != partition_count_box(n, a, k) || c[n] != brute[n])
            return "a=" + std::to_string(a) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
        }
      }
    note = std::to_string(checked) + " coefficients";
    return "";
  });

  criterion(4, "root-of-unity dissection = direct", [](std::string& note) -> std::string {
    std::vector<RatFun> battery{inverse_q_factorial(1), inverse_q_factorial(2)};
    for (int k = 1; k <= 5; ++k) {
      const RatFun base = inverse_q_factorial(k);
      for (const auto& p : subset_sum_polys(k)) battery.push_back({p, base.den});
    }
    long cases = 0;
    for (const auto& f : battery)
      for (long i = 0; i <= 4; ++i)
        for (long j = i + 1; j <= 4; ++j)
          for (long c = -2; c <= 3; ++c, ++cases) {
            const DissectionSpec spec{i, j, c, 24};
            if (!(lemma_a_roots(f, spec) == lemma_a_direct(f, spec)))
              return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " c=" + std::to_string(c);
          }
    note = std::to_string(cases) + " cases";
    return "";
  });

  criterion(5, "Eulerian, MacMahon and generating identities", [](std::string&) -> std::string {
    for (int k = 2; k <= 10; ++k)
      for (int j = 1; j < k; ++j)
        if (euler_frobenius(Rational(j), k) != eulerian_number(k - 1, j))
          return "C(" + std::to_string(j) + "," + std::to_string(k) + ")";
    for (int k = 1; k <= 7; ++k) {
      const auto brute = oracle::type_b_descent_counts(k - 1);
      for (int j = 1; j <= k; ++j) {
        Integer two;
        mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(k - 1));
        const Rational lhs = Rational(two) * euler_frobenius(Rational(2 * j - 1, 2), k);
        if (lhs != macmahon_number(k - 1, j) || lhs != brute[j - 1])
          return "B(" + std::to_string(k - 1) + "," + std::to_string(j) + ")";
      }
    }
    for (int v = 1; v <= 4; ++v)
      for (int k = 1; k <= 8; ++k) {
        const GeneulReport r = verify_geneul(v, k, 4L * v * k);
        if (!r.ok) return "v=" + std::to_string(v) + " k=" + std::to_string(k) + " " + r.detail;
      }
    return "";
  });

  criterion(6, "coefficient asymptotics", [](std::string& note) -> std::string {
    struct Case {
      int k;
      Rational alpha;
      long c;
    };
    const std::vector<Case> cases{{4, Rational(2), 0}, {5, Rational(5, 2), 0}, {5, Rational(3, 2), 1}, {6, Rational(3), 2}};
    std::ostringstream ratios;
    for (const auto& cs : cases) {
      const double r = ratio(coeff_at(cs.k, kTheorem2A, cs.alpha, cs.c), predict_coeff(cs.alpha, cs.k, kTheorem2A));
      ratios << (ratios.tellp() > 0 ? " " : "") << r;
      const double tol = cs.k == 4 ? kCoeffTolK4 : kCoeffTol;
      if (std::fabs(r - 1.0) > tol) return "k=" + std::to_string(cs.k) + " ratio " + std::to_string(r);
    }
    note = "ratios " + ratios.str();
    return "";
  });

  criterion(7, "difference asymptotics, k = 6", [](std::string& note) -> std::string {
    std::ostringstream info;
    for (long c = 0; c <= 2; ++c) {
      const double r = ratio(f_coeff(6, c, kTheorem3A), predict_diff(6, c, kTheorem3A));
      if (std::fabs(r - 1.0) > kDiffTol) return "c=" + std::to_string(c) + " ratio " + std::to_string(r);
      const double early = std::fabs(f_coeff(6, c, 100).get_d()) / std::pow(100.0, 4);
      const double late = std::fabs(f_coeff(6, c, 1000).get_d()) / std::pow(1000.0, 4);
      if (late * kDecayFactor > early) return "c=" + std::to_string(c) + " |diff|/a^4 decays only " + std::to_string(early / late);
      info << " c=" << c << ":" << r << "," << early / late << "x";
    }
    note = "ratio,decay" + info.str();
    return "";
  });

  criterion(8, "k = 4 difference bounded residual", [](std::string& note) -> std::string {
    std::ostringstream info;
    const FixedKCoefficients table(4, 4 * 2000);
    for (long c = 0; c <= 3; ++c) {
      double window = 0, full = 0;
      for (long a = 100; a <= 2000; ++a) {
        const double res = std::fabs(Rational(Rational(table.f(c, a)) - predict_diff_k4(c, a)).get_d());
        full = std::max(full, res);
        if (a <= 200) window = std::max(window, res);
      }
      if (full > window + kK4Slack) return "c=" + std::to_string(c) + " max " + std::to_string(full);
      info << " c=" << c << ":" << full;
    }
    note = "max |residual|" + info.str();
    return "";
  });

  criterion(9, "quasipolynomial fits", [](std::string& note) -> std::string {
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<long> pick(0, kHeldOutMax);
    long checked = 0;
    for (int k = 1; k <= 6; ++k)
      for (Which w : {Which::G, Which::F}) {
        const RatFun2 closed = reconstruct(k, w);
        for (long c = 0; c <= 3; ++c) {
          const Quasipoly q = quasipoly_fit(k, c, w, closed);
          for (int s = 0; s < kHeldOut; ++s, ++checked) {
            const long a = pick(rng);
            const Integer exact = w == Which::G ? g_coeff(k, c, a) : f_coeff(k, c, a);
            if (q(a) != exact)
              return std::string(1, which_name(w)) + std::to_string(k) + " c=" + std::to_string(c) + " a=" + std::to_string(a);
          }
        }
      }
    note = std::to_string(checked) + " values";
    return "";
  });

  std::cout << "summary: " << 9 - failures << " passed, " << failures << " failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
