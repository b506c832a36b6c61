#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  using lfmsemi::cli::RunConfig;

  CLI::App app{"Linear fractional self-maps of the unit ball in C^2: classification and "
               "one-parameter semigroup embedding"};
  app.require_subcommand(1);

  RunConfig config;
  double t_value = 0.0;
  std::string t_grid, z0;

  auto add_common = [&](CLI::App* sub, bool with_t, bool with_points) {
    sub->add_option("--input", config.input_path, "map JSON file");
    if (with_t) {
      sub->add_option("--t", t_value, "semigroup parameter t");
      sub->add_option("--t-grid", t_grid, "grid start:stop:step");
    }
    if (with_points) sub->add_option("--z0", z0, "start point re1,im1,re2,im2");
    sub->add_option("--samples", config.samples, "sample count for randomized checks")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "random seed");
    sub->add_option("--tol", config.tolerance, "pass/fail tolerance");
    sub->add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", config.output_path, "write output to this file");
  };

  add_common(app.add_subcommand("classify", "Denjoy-Wolff data and model of a self-map"), false,
             false);
  auto* embed = app.add_subcommand("embed", "emit the continuous iterate phi_t as a map");
  add_common(embed, true, false);
  auto* orbit = app.add_subcommand("orbit", "trajectory of a point under phi_t, as CSV");
  add_common(orbit, true, true);
  add_common(app.add_subcommand("verify", "self-map, fixed-point and semigroup-law checks"),
             false, false);
  add_common(app.add_subcommand("reproduce-paper", "replay the built-in worked examples"), false,
             false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lfmsemi::cli::kExitParseError;
  }

  CLI::App* sub = app.get_subcommands().front();
  config.command = sub->get_name();
  const CLI::Option* t_opt = sub->get_option_no_throw("--t");
  if (t_opt != nullptr && t_opt->count() > 0) config.t = t_value;
  if (!t_grid.empty()) config.t_grid = t_grid;
  if (!z0.empty()) config.z0 = z0;

  return lfmsemi::cli::run_command(config, std::cout, std::cerr);
}
