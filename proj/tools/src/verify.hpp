#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace gaussq::cli {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// lemma1, theorem1, eulerian, geneul, theorem2, theorem3.
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite. "all" runs every suite.
std::vector<CheckResult> run_suite(const std::string& suite, bool quick, const Config& cfg);

}  // namespace gaussq::cli
