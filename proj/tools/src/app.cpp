#include "app.hpp"

#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "config.hpp"
#include "gaussq/gaussq.hpp"
#include "verify.hpp"

namespace gaussq::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  Integer num, den = 1;
  if (num.set_str(s.substr(0, slash), 10) != 0) throw UsageError("bad rational '" + s + "'");
  if (slash != std::string::npos && den.set_str(s.substr(slash + 1), 10) != 0) {
    throw UsageError("bad rational '" + s + "'");
  }
  if (den == 0) throw UsageError("zero denominator in '" + s + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string header_line() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return std::string("# gaussq ") + GAUSSQ_VERSION + " generated " + buf + "\n";
}

void check_k(int k, const Config& cfg) {
  if (k < 1) throw UsageError("k must be positive");
  if (k > cfg.max_k) {
    throw Error("k exceeds configured maximum (" + std::to_string(cfg.max_k) + ")");
  }
}

struct CoeffArgs {
  int k = 0;
  long a = 0;
  std::string alpha;
  long c = 0;
  bool all = false;
  std::string format = "text";
};

std::string cmd_coeff(const CoeffArgs& args, const Config& cfg) {
  check_k(args.k, cfg);
  if (args.a < 0) throw UsageError("a must be nonnegative");
  std::ostringstream out;
  if (args.all) {
    const auto coeffs = qbinomial_coefficients(args.a, args.k);
    if (args.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& v : coeffs) arr.push_back(v.get_str());
      out << nlohmann::json{{"k", args.k}, {"a", args.a}, {"coefficients", arr}}.dump() << "\n";
    } else if (args.format == "csv") {
      out << "exponent,coefficient\n";
      for (std::size_t n = 0; n < coeffs.size(); ++n) out << n << ',' << coeffs[n].get_str() << "\n";
    } else {
      for (std::size_t n = 0; n < coeffs.size(); ++n) out << (n ? " " : "") << coeffs[n].get_str();
      out << "\n";
    }
    return out.str();
  }
  CoeffQuery q{args.k, args.a, args.c, std::nullopt};
  if (!args.alpha.empty()) {
    q.alpha = parse_rational(args.alpha);
    if (*q.alpha < 0) throw UsageError("alpha must be nonnegative");
  }
  const Integer v = coeff(q);
  const long exponent = q.target_exponent();
  if (args.format == "json") {
    nlohmann::json doc{{"k", args.k},
                       {"a", args.a},
                       {"alpha", q.alpha ? nlohmann::json(to_string(*q.alpha)) : nlohmann::json(nullptr)},
                       {"c", args.c},
                       {"exponent", exponent},
                       {"coefficient", v.get_str()}};
    out << doc.dump() << "\n";
  } else if (args.format == "csv") {
    out << "k,a,alpha,c,exponent,coefficient\n"
        << args.k << ',' << args.a << ',' << (q.alpha ? to_string(*q.alpha) : "") << ',' << args.c << ','
        << exponent << ',' << v.get_str() << "\n";
  } else {
    out << v.get_str() << "\n";
  }
  return out.str();
}

struct GenfunArgs {
  int k = 0;
  std::string which;
  bool reconstruct = false;
  std::vector<long> series;
  bool t0 = false;
  long order = 0;
  long margin = -1;
  std::string format = "text";
};

std::string cmd_genfun(const GenfunArgs& args, const Config& cfg) {
  check_k(args.k, cfg);
  const Which w = parse_which(args.which);
  std::ostringstream out;
  if (!args.series.empty()) {
    const long n = args.series[0], t = args.series[1];
    if (n < 0 || t < 0) throw UsageError("--series needs nonnegative N and T");
    const XSeries s = series_FG(args.k, w, n, t);
    if (args.format == "csv") {
      out << "a,c,coefficient\n";
      for (long a = 0; a <= n; ++a) {
        for (long c = 0; c <= t; ++c) out << a << ',' << c << ',' << s.coeff(a, c).get_str() << "\n";
      }
      return out.str();
    }
    const std::string text = to_string(s.to_bipoly()) + " + O(x^" + std::to_string(n + 1) + ")";
    if (args.format == "json") {
      out << nlohmann::json{{"k", args.k}, {"which", args.which}, {"order", n}, {"t_order", t}, {"series", text}}.dump()
          << "\n";
    } else {
      out << text << "\n";
    }
    return out.str();
  }
  ReconstructOptions opts = cfg.reconstruct;
  if (args.order > 0) opts.order = args.order;
  if (args.margin >= 0) opts.margin = args.margin;
  RatFun2 r = reconstruct(args.k, w, opts);
  if (args.t0) r = r.at_t_zero();
  if (args.format == "json") {
    out << nlohmann::json{{"k", args.k},
                          {"which", std::string(1, which_name(w))},
                          {"t_zero", args.t0},
                          {"numerator", to_string(r.numerator)},
                          {"denominator", to_string(r.denominator)}}
               .dump()
        << "\n";
  } else if (args.format == "csv") {
    out << "numerator,denominator\n\"" << to_string(r.numerator) << "\",\"" << to_string(r.denominator) << "\"\n";
  } else {
    out << to_string(r) << "\n";
  }
  return out.str();
}

std::pair<std::string, bool> cmd_verify(const std::string& suite, bool quick, const std::string& format,
                                        bool header, const Config& cfg) {
  const auto checks = run_suite(suite, quick, cfg);
  long passed = 0;
  for (const auto& c : checks) passed += c.pass ? 1 : 0;
  const long failed = static_cast<long>(checks.size()) - passed;
  std::ostringstream out;
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
      arr.push_back({{"name", c.name}, {"status", c.pass ? "PASS" : "FAIL"}, {"detail", c.detail}});
    }
    out << nlohmann::json{{"suite", suite}, {"quick", quick}, {"passed", passed}, {"failed", failed}, {"checks", arr}}
               .dump(2)
        << "\n";
  } else {
    if (header) out << header_line();
    for (const auto& c : checks) {
      out << c.name << ": " << (c.pass ? "PASS" : "FAIL");
      if (!c.pass && !c.detail.empty()) out << " (" << c.detail << ")";
      out << "\n";
    }
    out << "summary: " << passed << " passed, " << failed << " failed\n";
  }
  return {out.str(), failed == 0 && !checks.empty()};
}

struct AsympArgs {
  std::string mode;
  int k = 0;
  std::string alpha;
  long c = 0;
  long amin = 0;
  long amax = 0;
  long steps = 20;
  std::string format = "csv";
};

std::pair<std::string, bool> cmd_asymp(const AsympArgs& args, bool header, const Config& cfg) {
  check_k(args.k, cfg);
  ReportParams p;
  p.k = args.k;
  p.c = args.c;
  if (args.c < 0) throw UsageError("c must be nonnegative");
  if (args.mode == "coeff") {
    p.mode = AsymMode::Coeff;
    if (!args.alpha.empty()) p.alpha = parse_rational(args.alpha);
  } else {
    if (!args.alpha.empty()) throw UsageError("--alpha applies to coeff mode only");
    p.mode = args.k == 4 ? AsymMode::DiffK4 : AsymMode::Diff;
  }
  const long amin = args.amin > 0 ? args.amin : (p.mode == AsymMode::Coeff ? 100 : 50);
  const long amax = args.amax > 0 ? args.amax : (p.mode == AsymMode::Coeff ? 2000 : 800);
  if (amax < amin) throw UsageError("--amax must be at least --amin");
  const auto grid = a_grid(amin, amax, args.steps);
  const ConvergenceReport rep = convergence_report(p, grid, cfg.tolerances);
  std::ostringstream out;
  if (args.format == "json") {
    out << to_json(rep);
  } else if (args.format == "csv") {
    if (header) out << header_line();
    out << to_csv(rep);
  } else {
    if (header) out << header_line();
    out << "mode " << mode_name(p.mode) << ", k=" << p.k;
    if (p.alpha) out << ", alpha=" << to_string(*p.alpha);
    out << ", c=" << p.c << "\n";
    for (const auto& row : rep.rows) {
      out << "a=" << row.a << " exact=" << row.exact.get_str();
      if (row.predicted) out << " predicted=" << decimal(*row.predicted);
      if (row.ratio) out << " ratio=" << decimal(*row.ratio);
      out << "\n";
    }
    out << "verdict: " << verdict_name(rep.verdict) << "\n";
  }
  return {out.str(), rep.verdict != Verdict::Inconsistent};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact coefficients of Gaussian polynomials and their generating functions"};
  app.name("gaussq");
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path, output_path;
  bool no_header = false;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("-o,--output", output_path, "write output to this file");
  app.add_flag("--no-header", no_header, "omit the timestamp header on reports");
  const std::vector<std::string> formats{"text", "csv", "json"};

  CoeffArgs ca;
  auto* coeff_cmd = app.add_subcommand("coeff", "coefficients of (a+k choose k)_q");
  coeff_cmd->add_option("-k", ca.k, "k")->required();
  coeff_cmd->add_option("-a", ca.a, "a")->required();
  coeff_cmd->add_option("--alpha", ca.alpha, "exponent floor(alpha a) - c instead of the middle; u/v");
  coeff_cmd->add_option("-c,--c", ca.c, "distance below the target exponent");
  coeff_cmd->add_flag("--all", ca.all, "print every coefficient");
  coeff_cmd->add_option("--format", ca.format)->check(CLI::IsMember(formats));

  GenfunArgs ga;
  auto* genfun_cmd = app.add_subcommand("genfun", "closed form or series of F_k / G_k");
  genfun_cmd->add_option("-k", ga.k, "k")->required();
  genfun_cmd->add_option("which", ga.which, "F or G")->required()->check(CLI::IsMember({"F", "G", "f", "g"}));
  genfun_cmd->add_flag("--reconstruct", ga.reconstruct, "reconstruct the closed form (default)");
  genfun_cmd->add_option("--series", ga.series, "print the series to x^N, t^T")->expected(2);
  genfun_cmd->add_flag("--t0", ga.t0, "specialize the closed form at t = 0");
  genfun_cmd->add_option("--order", ga.order, "series coefficients used for fitting");
  genfun_cmd->add_option("--margin", ga.margin, "extra coefficients used for verification");
  genfun_cmd->add_option("--format", ga.format)->check(CLI::IsMember(formats));

  std::string suite, verify_format = "text";
  bool quick = false;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(suites));
  verify_cmd->add_flag("--quick", quick, "reduced battery");
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

  AsympArgs aa;
  auto* asymp_cmd = app.add_subcommand("asymp", "convergence report against the leading-term predictions");
  asymp_cmd->add_option("mode", aa.mode)->required()->check(CLI::IsMember({"coeff", "diff"}));
  asymp_cmd->add_option("-k", aa.k, "k")->required();
  asymp_cmd->add_option("--alpha", aa.alpha, "u/v (coeff mode; default k/2)");
  asymp_cmd->add_option("-c,--c", aa.c, "offset c");
  asymp_cmd->add_option("--amin", aa.amin, "smallest a");
  asymp_cmd->add_option("--amax", aa.amax, "largest a");
  asymp_cmd->add_option("--steps", aa.steps, "number of a values")->check(CLI::PositiveNumber);
  asymp_cmd->add_option("--format", aa.format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Config cfg;
  try {
    if (!config_path.empty()) cfg = load_config(config_path);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::string text;
  bool ok = true;
  try {
    if (*coeff_cmd) {
      text = cmd_coeff(ca, cfg);
    } else if (*genfun_cmd) {
      text = cmd_genfun(ga, cfg);
    } else if (*verify_cmd) {
      std::tie(text, ok) = cmd_verify(suite, quick, verify_format, !no_header, cfg);
    } else if (*asymp_cmd) {
      std::tie(text, ok) = cmd_asymp(aa, !no_header, cfg);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (output_path.empty()) {
    out << text;
  } else {
    std::ofstream f(output_path);
    if (!f) {
      err << "error: cannot write " << output_path << "\n";
      return 1;
    }
    f << text;
  }
  return ok ? 0 : 1;
}

}  // namespace gaussq::cli
