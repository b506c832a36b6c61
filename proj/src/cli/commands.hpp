#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace lfmsemi::cli {

// Exit codes: 0 ok, 1 failed verification, 2 parse/config error, 3 math error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitMathError = 3;

struct RunConfig {
  std::string command;  // classify | embed | orbit | verify | reproduce-paper
  std::string input_path;
  std::optional<double> t;
  std::optional<std::string> t_grid;  // "start:stop:step"
  std::optional<std::string> z0;      // "re1,im1,re2,im2"
  int samples = 10000;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  std::string format = "text";  // json | csv | text
  std::string output_path;      // empty: write to `out`
};

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace lfmsemi::cli
