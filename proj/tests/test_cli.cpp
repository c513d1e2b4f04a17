#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "app.hpp"
#include "config.hpp"
#include "verify.hpp"
#include "gaussq/genfun.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result gaussq_run(std::vector<std::string> args) {
  args.insert(args.begin(), "gaussq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = gaussq::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / ("gaussq_test_" + name);
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST(Coeff, Examples) {
  EXPECT_EQ(gaussq_run({"coeff", "-k", "4", "-a", "2"}).out, "3\n");
  EXPECT_EQ(gaussq_run({"coeff", "-k", "4", "-a", "2", "-c", "1"}).out, "2\n");
  EXPECT_EQ(gaussq_run({"coeff", "-k", "4", "-a", "2", "--alpha", "1/2"}).out, "1\n");
  const Result all = gaussq_run({"coeff", "-k", "4", "-a", "2", "--all"});
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(all.out, "1 1 2 2 3 2 2 1 1\n");
}

TEST(Coeff, JsonUsesStringIntegers) {
  const Result r = gaussq_run({"coeff", "-k", "8", "-a", "3000", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j["coefficient"].is_string());
  // beyond 64 bits
  EXPECT_GE(j["coefficient"].get<std::string>().size(), 20u);
  const auto all = nlohmann::json::parse(gaussq_run({"coeff", "-k", "4", "-a", "2", "--all", "--format", "json"}).out);
  EXPECT_EQ(all["coefficients"].size(), 9u);
}

TEST(Coeff, CsvHasHeader) {
  const Result r = gaussq_run({"coeff", "-k", "4", "-a", "10", "--format", "csv"});
  EXPECT_EQ(r.out, "k,a,alpha,c,exponent,coefficient\n4,10,,0,20,55\n");
}

TEST(ExitCodes, UsageAndComputationErrors) {
  EXPECT_EQ(gaussq_run({"coeff", "-k"}).code, 2);
  EXPECT_EQ(gaussq_run({"coeff", "-k", "4", "-a", "2", "--format", "xml"}).code, 2);
  EXPECT_EQ(gaussq_run({"frobnicate"}).code, 2);
  EXPECT_EQ(gaussq_run({"verify", "nosuch"}).code, 2);
  EXPECT_EQ(gaussq_run({"--config", "/nonexistent/gaussq.cfg", "coeff", "-k", "2", "-a", "2"}).code, 2);
  const Result big = gaussq_run({"genfun", "-k", "9", "F"});
  EXPECT_EQ(big.code, 1);
  EXPECT_NE(big.err.find("k exceeds configured maximum (8)"), std::string::npos);
  EXPECT_EQ(gaussq_run({"genfun", "-k", "4", "H"}).code, 2);
}

TEST(Genfun, ReconstructOutputParsesBack) {
  const Result r = gaussq_run({"genfun", "-k", "4", "F", "--reconstruct"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(1 - x*t + x^2*t^2) / (Phi1^2*Phi2*Phi3*(1 - x*t)*(1 - x*t^2))\n");
  for (const char* w : {"F", "G"})
    for (const char* k : {"3", "5", "6"}) {
      const Result rk = gaussq_run({"genfun", "-k", k, w, "--reconstruct"});
      ASSERT_EQ(rk.code, 0) << rk.err;
      const auto parsed = gaussq::parse_ratfun2(rk.out.substr(0, rk.out.size() - 1));
      const auto direct = gaussq::reconstruct(std::stoi(k), gaussq::parse_which(w));
      EXPECT_TRUE(parsed.same_function(direct)) << w << k;
    }
}

TEST(Genfun, SeriesAndTZero) {
  EXPECT_EQ(gaussq_run({"genfun", "-k", "4", "F", "--series", "3", "2"}).out,
            "1 + x*t^2 + x^2 + x^2*t^2 + x^3 + x^3*t^2 + O(x^4)\n");
  EXPECT_EQ(gaussq_run({"genfun", "-k", "4", "F", "--t0"}).out, "(1) / (Phi1^2*Phi2*Phi3)\n");
  const Result tight = gaussq_run({"genfun", "-k", "4", "G", "--reconstruct", "--order", "6"});
  EXPECT_EQ(tight.code, 1);
  EXPECT_NE(tight.err.find("truncation too small"), std::string::npos) << tight.err;
}

TEST(Verify, SuitesPassAndReport) {
  const Result r = gaussq_run({"--no-header", "verify", "eulerian"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("C(j,k)=A(k-1,j): PASS"), std::string::npos);
  EXPECT_NE(r.out.find("summary: 5 passed, 0 failed"), std::string::npos);
  EXPECT_EQ(r.out.find("# gaussq"), std::string::npos);
  const Result lemma = gaussq_run({"verify", "lemma1", "--quick"});
  EXPECT_EQ(lemma.code, 0) << lemma.out;
  EXPECT_EQ(lemma.out.rfind("# gaussq ", 0), 0u);
  const auto j = nlohmann::json::parse(gaussq_run({"verify", "geneul", "--quick", "--format", "json"}).out);
  EXPECT_FALSE(j.empty());
}

TEST(Verify, AllSuitesQuick) {
  gaussq::cli::Config cfg;
  for (const auto& suite : gaussq::cli::suite_names()) {
    for (const auto& check : gaussq::cli::run_suite(suite, true, cfg)) EXPECT_TRUE(check.pass) << suite << ": " << check.name << " " << check.detail;
  }
  EXPECT_THROW(gaussq::cli::run_suite("bogus", true, cfg), std::invalid_argument);
}

TEST(Verify, BrokenFixtureIsReported) {
  const auto dir = std::filesystem::temp_directory_path() / "gaussq_bad_fixtures";
  std::filesystem::create_directories(dir);
  for (const auto& e : std::filesystem::directory_iterator(gaussq::cli::fixture_dir()))
    std::filesystem::copy_file(e.path(), dir / e.path().filename(), std::filesystem::copy_options::overwrite_existing);
  std::ofstream(dir / "F4.txt") << "name: F4\nnumerator: 1 + x*t\ndenominator: (1 - x^2)*(1 - x^3)*(1 - x*t)*(1 - x*t^2)\n";
  const char* saved = std::getenv("GAUSSQ_FIXTURES");
  const std::string restore = saved ? saved : "";
  setenv("GAUSSQ_FIXTURES", dir.c_str(), 1);
  EXPECT_EQ(gaussq::cli::fixture_dir(), dir.string());
  const Result r = gaussq_run({"--no-header", "verify", "theorem1", "--quick"});
  if (saved) setenv("GAUSSQ_FIXTURES", restore.c_str(), 1); else unsetenv("GAUSSQ_FIXTURES");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("F4"), std::string::npos);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Asymp, CsvAndVerdict) {
  const Result r = gaussq_run({"--no-header", "asymp", "coeff", "-k", "4", "--amin", "100", "--amax", "400", "--steps", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
  EXPECT_NE(r.out.find("\n400,1811345,16000000/9,"), std::string::npos);
  const Result k4 = gaussq_run({"--no-header", "asymp", "diff", "-k", "4", "--c", "1", "--format", "json", "--steps", "5"});
  ASSERT_EQ(k4.code, 0) << k4.err;
  const auto j = nlohmann::json::parse(k4.out);
  EXPECT_EQ(j["mode"], "diff_k4");
  EXPECT_EQ(j["rows"][0]["predicted"]["exact"], "0");
  const Result none = gaussq_run({"asymp", "diff", "-k", "5", "--format", "text", "--steps", "4", "--no-header"});
  EXPECT_EQ(none.code, 0);
  EXPECT_NE(none.out.find("verdict: no prediction available"), std::string::npos);
}

TEST(Output, DeterministicAndFile) {
  const std::vector<std::string> args{"--no-header", "asymp", "diff", "-k", "6", "--steps", "5"};
  EXPECT_EQ(gaussq_run(args).out, gaussq_run(args).out);
  const auto path = std::filesystem::temp_directory_path() / "gaussq_test_out.txt";
  const Result r = gaussq_run({"-o", path.string(), "coeff", "-k", "4", "-a", "2", "--all"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "1 1 2 2 3 2 2 1 1");
  std::filesystem::remove(path);
}

TEST(Config, FileOverridesDefaults) {
  const auto cfg = temp_file("small.cfg", "# small\nmax_k = 3\norder = 50\n");
  EXPECT_EQ(gaussq_run({"--config", cfg.string(), "genfun", "-k", "4", "F"}).code, 1);
  EXPECT_EQ(gaussq_run({"--config", cfg.string(), "genfun", "-k", "3", "F"}).code, 0);
  const auto bad = temp_file("bad.cfg", "colour = blue\n");
  EXPECT_EQ(gaussq_run({"--config", bad.string(), "coeff", "-k", "2", "-a", "2"}).code, 2);
  const gaussq::cli::Config c = gaussq::cli::parse_config("tol_diff = 0.1\nmargin = 5\n");
  EXPECT_DOUBLE_EQ(c.tolerances.diff, 0.1);
  EXPECT_EQ(c.reconstruct.margin, 5);
  EXPECT_THROW(gaussq::cli::parse_config("max_k = many\n"), gaussq::cli::ConfigError);
  std::filesystem::remove(cfg);
  std::filesystem::remove(bad);
}
