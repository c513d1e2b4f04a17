#include "verify.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gaussq/gaussq.hpp"

namespace gaussq::cli {

namespace {

using Checks = std::vector<CheckResult>;

void record(Checks& out, std::string name, const std::function<std::string()>& body) {
  // body returns "" on success, otherwise a description of the failure.
  try {
    const std::string failure = body();
    out.push_back({std::move(name), failure.empty(), failure});
  } catch (const std::exception& e) {
    out.push_back({std::move(name), false, std::string("exception: ") + e.what()});
  }
}

RatFun ratfun(std::initializer_list<long> num, std::initializer_list<long> den) {
  return {UniPoly::from_ints(num, 'q'), UniPoly::from_ints(den, 'q')};
}

UniPoly q_factorial(int k) {
  UniPoly p = UniPoly::constant(1, 'q');
  for (int i = 1; i <= k; ++i) p *= UniPoly::constant(1, 'q') - UniPoly::monomial(1, static_cast<std::size_t>(i), 'q');
  return p;
}

// 1/(1-q), 1/((1-q)(1-q^2)) and P_i(q)/[k]! for k <= max_k.
std::vector<RatFun> dissection_battery(int max_k) {
  std::vector<RatFun> out{ratfun({1}, {1, -1}), ratfun({1}, {1, -1, -1, 1})};
  for (int k = 1; k <= max_k; ++k) {
    const UniPoly den = q_factorial(k);
    for (const auto& p : subset_sum_polys(k)) out.push_back({p, den});
  }
  return out;
}

Checks suite_lemma1(bool quick) {
  Checks out;
  const long max_j = quick ? 3 : 4;
  const long order = quick ? 10 : 24;
  const auto battery = dissection_battery(quick ? 3 : 5);
  record(out, "lemma_a_roots = lemma_a_direct", [&]() -> std::string {
    for (std::size_t f = 0; f < battery.size(); ++f) {
      for (long j = 1; j <= max_j; ++j) {
        for (long i = 0; i < j; ++i) {
          for (long c = -2; c <= 3; ++c) {
            const DissectionSpec spec{i, j, c, order};
            if (!(lemma_a_roots(battery[f], spec) == lemma_a_direct(battery[f], spec))) {
              return "mismatch for F#" + std::to_string(f) + " i=" + std::to_string(i) +
                     " j=" + std::to_string(j) + " c=" + std::to_string(c);
            }
          }
        }
      }
    }
    return "";
  });
  record(out, "lemma_b = sum_c t^c lemma_a", [&]() -> std::string {
    const long t_order = 6;
    for (std::size_t f = 0; f < battery.size(); ++f) {
      for (long j = 1; j <= max_j; ++j) {
        for (long i = 0; i < j; ++i) {
          const XSeries b = lemma_b(battery[f], i, j, order, t_order);
          for (long c = 0; c <= t_order; ++c) {
            if (!(b.t_slice(c) == lemma_a_direct(battery[f], {i, j, c, order}))) {
              return "mismatch for F#" + std::to_string(f) + " i=" + std::to_string(i) +
                     " j=" + std::to_string(j) + " c=" + std::to_string(c);
            }
          }
        }
      }
    }
    return "";
  });
  return out;
}

std::string fixture_path(const std::string& name) {
  return (std::filesystem::path(fixture_dir()) / (name + ".txt")).string();
}

// Compares one fixture against a fresh reconstruction.
std::string compare_fixture(const std::string& name, const Config& cfg) {
  const Fixture fx = load_fixture(fixture_path(name));
  const Which which = parse_which(name.substr(0, 1));
  const int k = std::stoi(name.substr(1));
  RatFun2 ours = reconstruct(k, which, cfg.reconstruct);
  if (fx.t_zero_slice) ours = ours.at_t_zero();
  if (fx.numerator && fx.denominator) {
    const RatFun2 ref{*fx.numerator, *fx.denominator};
    if (!ref.same_function(ours)) return "closed form differs: got " + to_string(ours);
  } else if (fx.denominator) {
    if (!(*fx.denominator == ours.denominator)) return "denominator differs: got " + to_string(ours.denominator);
  }
  if (!fx.series.empty()) {
    const XSeries s = ours.expand(static_cast<long>(fx.series.size()) - 1);
    for (std::size_t a = 0; a < fx.series.size(); ++a) {
      if (s.coeff(static_cast<long>(a), 0) != fx.series[a]) return "series differs at x^" + std::to_string(a);
    }
  }
  return "";
}

Checks suite_theorem1(bool quick, const Config& cfg) {
  Checks out;
  const int max_k = std::min(quick ? 4 : 8, cfg.max_k);
  record(out, "qbinomial = box partition count", [&]() -> std::string {
    const long amax = quick ? 6 : 12;
    for (int k = 1; k <= 8; ++k) {
      for (long a = 0; a <= amax; ++a) {
        const auto coeffs = qbinomial_coefficients(a, k);
        for (long n = 0; n <= a * k; ++n) {
          if (coeffs[static_cast<std::size_t>(n)] != partition_count_box(n, a, k)) {
            return "k=" + std::to_string(k) + " a=" + std::to_string(a) + " n=" + std::to_string(n);
          }
        }
      }
    }
    return "";
  });
  for (int k = 1; k <= max_k; ++k) {
    for (Which w : {Which::F, Which::G}) {
      const std::string label = std::string(1, which_name(w)) + std::to_string(k);
      record(out, label + " reconstructs inside the ansatz", [&]() -> std::string {
        const RatFun2 r = reconstruct(k, w, cfg.reconstruct);
        return DenominatorAnsatz(k, w, cfg.reconstruct.bounds).contains(r.denominator) ? "" : "outside ansatz";
      });
    }
  }
  std::vector<std::string> names{"F3", "G3", "F4", "G4"};
  if (!quick) {
    for (const char* n : {"F6", "G6", "F8", "G8", "F5_t0", "G5_t0", "F8_t0"}) names.emplace_back(n);
  }
  for (const auto& name : names) {
    const std::string base = name.substr(0, name.find('_'));
    if (std::stoi(base.substr(1)) > cfg.max_k) continue;
    record(out, name + " matches the reference form", [&] { return compare_fixture(name, cfg); });
  }
  const int qp_k = quick ? 3 : 6;
  record(out, "quasipolynomials reproduce g and f", [&]() -> std::string {
    std::mt19937_64 rng(20261016);
    for (int k = 1; k <= qp_k; ++k) {
      for (Which w : {Which::G, Which::F}) {
        const RatFun2 h = reconstruct(k, w, cfg.reconstruct);
        for (long c = 0; c <= 3; ++c) {
          const Quasipoly q = quasipoly_fit(k, c, w, h);
          std::uniform_int_distribution<long> pick(0, 500);
          for (int s = 0; s < (quick ? 10 : 50); ++s) {
            const long a = pick(rng);
            const Integer exact = w == Which::G ? g_coeff(k, c, a) : f_coeff(k, c, a);
            if (q(a) != exact) {
              return std::string(1, which_name(w)) + std::to_string(k) + " c=" + std::to_string(c) +
                     " a=" + std::to_string(a);
            }
          }
        }
      }
    }
    return "";
  });
  return out;
}

Checks suite_eulerian(bool quick) {
  Checks out;
  const int kmax = quick ? 7 : 10;
  record(out, "C(j,k)=A(k-1,j)", [&]() -> std::string {
    for (int k = 2; k <= kmax; ++k) {
      for (int j = 1; j < k; ++j) {
        if (euler_frobenius(Rational(j), k) != eulerian_number(k - 1, j)) {
          return "j=" + std::to_string(j) + " k=" + std::to_string(k);
        }
      }
    }
    return "";
  });
  record(out, "2^(k-1)C((2j-1)/2,k)=B(k-1,j)", [&]() -> std::string {
    for (int k = 1; k <= 7; ++k) {
      for (int j = 1; j <= k; ++j) {
        const Rational lhs = Rational(1L << (k - 1)) * euler_frobenius(Rational(2 * j - 1, 2), k);
        if (lhs != macmahon_number(k - 1, j)) return "j=" + std::to_string(j) + " k=" + std::to_string(k);
      }
    }
    return "";
  });
  record(out, "sum n^d x^n = A_d(x)/(1-x)^(d+1)", [&]() -> std::string {
    for (int d = 0; d <= 8; ++d) {
      const long n_max = 30;
      std::vector<Rational> s(n_max + 1);
      for (long n = 0; n <= n_max; ++n) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(d));
        s[n] = p;
      }
      const UniPoly lhs = UniPoly(s, 'x') * UniPoly::from_ints({1, -1}, 'x').pow(static_cast<unsigned>(d + 1));
      const UniPoly a = eulerian_poly(d);
      for (long n = 0; n <= n_max; ++n) {
        if (lhs.coeff(n) != a.coeff(n)) return "d=" + std::to_string(d) + " n=" + std::to_string(n);
      }
    }
    return "";
  });
  record(out, "C(k-alpha,k)=C(alpha,k)", [&]() -> std::string {
    for (int k = 1; k <= 8; ++k) {
      // C(., 1) jumps at 0 and 1, so only the open interval is compared.
      if (k >= 2 && (euler_frobenius(Rational(0), k) != 0 || euler_frobenius(Rational(k), k) != 0)) {
        return "k=" + std::to_string(k) + " endpoints";
      }
      for (long num = 1; num < 6 * k; ++num) {
        const Rational alpha(num, 6);
        if (euler_frobenius(Rational(k) - alpha, k) != euler_frobenius(alpha, k)) {
          return "k=" + std::to_string(k) + " alpha=" + alpha.get_str();
        }
      }
    }
    return "";
  });
  record(out, "lattice slice count = [q^(a beta)]", [&]() -> std::string {
    for (int k = 1; k <= 6; ++k) {
      for (long beta = 0; beta <= k; ++beta) {
        for (long a = 0; a <= (quick ? 6 : 10); ++a) {
          const auto coeffs = qbinomial_coefficients(a, k);
          if (lattice_slice_count(k, beta, a) != coeffs[static_cast<std::size_t>(a * beta)]) {
            return "k=" + std::to_string(k) + " beta=" + std::to_string(beta) + " a=" + std::to_string(a);
          }
        }
      }
    }
    return "";
  });
  return out;
}

Checks suite_geneul(bool quick) {
  Checks out;
  const int kmax = quick ? 5 : 8;
  record(out, "v^(k-1) sum C(u/v,k) x^u = [v]_x^k A_(k-1)(x)", [&]() -> std::string {
    for (int v = 1; v <= 4; ++v) {
      for (int k = 1; k <= kmax; ++k) {
        const GeneulReport r = verify_geneul(v, k, 4L * v * k);
        if (!r.ok) return "v=" + std::to_string(v) + " k=" + std::to_string(k) + ": " + r.detail;
      }
    }
    return "";
  });
  return out;
}

std::string ratio_failure(const ConvergenceReport& r) {
  if (r.verdict == Verdict::Consistent) return "";
  std::ostringstream s;
  s << verdict_name(r.verdict);
  if (!r.rows.empty() && r.rows.back().ratio) s << ", final ratio " << decimal(*r.rows.back().ratio);
  if (!r.residuals_bounded) s << ", residuals grow";
  return s.str();
}

Checks suite_theorem2(bool quick, const Config& cfg) {
  Checks out;
  struct Case {
    int k;
    Rational alpha;
    long c;
  };
  const std::vector<Case> cases{{4, 2, 0}, {5, Rational(5, 2), 0}, {5, Rational(3, 2), 1}, {6, 3, 2}};
  const auto grid = a_grid(100, 2000, quick ? 5 : 20);
  for (const auto& cs : cases) {
    if (cs.k > cfg.max_k) continue;
    const std::string name = "coefficient ratio -> 1 (k=" + std::to_string(cs.k) + ", alpha=" + cs.alpha.get_str() +
                             ", c=" + std::to_string(cs.c) + ")";
    record(out, name, [&] {
      return ratio_failure(convergence_report({AsymMode::Coeff, cs.k, cs.alpha, cs.c}, grid, cfg.tolerances));
    });
  }
  return out;
}

Checks suite_theorem3(bool quick, const Config& cfg) {
  Checks out;
  const auto grid = a_grid(50, 800, quick ? 5 : 16);
  for (long c = 0; c <= 2; ++c) {
    record(out, "difference ratio -> 1 (k=6, c=" + std::to_string(c) + ")", [&] {
      return ratio_failure(convergence_report({AsymMode::Diff, 6, std::nullopt, c}, grid, cfg.tolerances));
    });
  }
  record(out, "difference is o(a^(k-2)) (k=6)", [&]() -> std::string {
    const ReportParams p{AsymMode::Diff, 6, std::nullopt, 0};
    const Rational early = Rational(exact_value(p, 100)) / Rational(Integer(100) * 100 * 100 * 100);
    const Rational late = Rational(exact_value(p, 1000)) / Rational(Integer(1000) * 1000 * 1000 * 1000);
    return abs(late) * 5 <= abs(early) ? "" : "ratio only " + decimal(early / late);
  });
  const auto k4_grid = a_grid(100, quick ? 500 : 2000, quick ? 9 : 39);
  for (long c = 0; c <= 3; ++c) {
    record(out, "k=4 difference residual bounded (c=" + std::to_string(c) + ")", [&] {
      return ratio_failure(convergence_report({AsymMode::DiffK4, 4, std::nullopt, c}, k4_grid, cfg.tolerances));
    });
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma1", "theorem1", "eulerian", "geneul", "theorem2", "theorem3"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, bool quick, const Config& cfg) {
  if (suite == "all") {
    Checks all;
    for (const auto& name : suite_names()) {
      auto part = run_suite(name, quick, cfg);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (suite == "lemma1") return suite_lemma1(quick);
  if (suite == "theorem1") return suite_theorem1(quick, cfg);
  if (suite == "eulerian") return suite_eulerian(quick);
  if (suite == "geneul") return suite_geneul(quick);
  if (suite == "theorem2") return suite_theorem2(quick, cfg);
  if (suite == "theorem3") return suite_theorem3(quick, cfg);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace gaussq::cli
