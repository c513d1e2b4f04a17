#pragma once

#include <string>
#include <string_view>

#include "gaussq/asympt.hpp"
#include "gaussq/genfun.hpp"

namespace gaussq::cli {

struct Config {
  int max_k = 8;
  ReconstructOptions reconstruct;
  Tolerances tolerances;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// key = value lines, '#' comments. Keys: max_k, order, margin, ansatz_max_m,
// ansatz_max_exponent, recognition_limit, tol_coeff_small_k, tol_coeff,
// tol_diff, growth_factor, k4_slack.
Config parse_config(std::string_view text);
Config load_config(const std::string& path);

// $GAUSSQ_FIXTURES if set, else the source tree's fixtures/.
std::string fixture_dir();

}  // namespace gaussq::cli
