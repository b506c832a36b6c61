#include "cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "lfmsemi/map_json.hpp"
#include "lfmsemi/model.hpp"
#include "lfmsemi/reference_maps.hpp"
#include "lfmsemi/sampling.hpp"
#include "lfmsemi/semigroup.hpp"

namespace lfmsemi::cli {

using nlohmann::json;

namespace {

struct Check {
  std::string name;
  double max_residual = 0.0;
  bool pass = true;
  double tolerance = 0.0;  // threshold this check was judged against
};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string fmt_complex(Complex v) {
  char buf[96];
  // + 0.0 folds negative zeros away.
  std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", v.real() + 0.0, v.imag() + 0.0);
  return buf;
}

std::string fmt_matrix(const Mat3& m) {
  std::string out = "[";
  for (int i = 0; i < 3; ++i) {
    out += i == 0 ? "[" : "          [";
    for (int j = 0; j < 3; ++j) {
      out += fmt_complex(m(i, j));
      if (j < 2) out += ", ";
    }
    out += i < 2 ? "],\n" : "]]";
  }
  return out;
}

json report_json(const std::vector<Check>& checks, int exit_code) {
  json arr = json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name}, {"max_residual", c.max_residual}, {"pass", c.pass}});
  return json{{"checks", arr}, {"exit", exit_code}};
}

void print_report_text(std::ostream& os, const std::vector<Check>& checks) {
  for (const auto& c : checks)
    os << (c.pass ? "PASS" : "FAIL") << " " << c.name << " max_residual=" << fmt(c.max_residual)
       << " (tol=" << fmt(c.tolerance) << ")\n";
}

Check make_check(std::string name, double residual, double tolerance) {
  Check c;
  c.name = std::move(name);
  c.max_residual = residual;
  c.tolerance = tolerance;
  c.pass = residual <= tolerance;
  return c;
}

int report_exit(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return kExitVerifyFailed;
  return kExitOk;
}

class Output {
 public:
  Output(const RunConfig& config, std::ostream& fallback) {
    if (!config.output_path.empty()) {
      file_.open(config.output_path);
      if (!file_) throw std::runtime_error("cannot write " + config.output_path);
      os_ = &file_;
    } else {
      os_ = &fallback;
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_ = nullptr;
};

std::vector<double> parse_grid(const std::string& spec) {
  double start = 0, stop = 0, step = 0;
  char extra = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step, &extra) != 3)
    throw std::runtime_error("grid must be start:stop:step");
  if (!(step > 0.0)) throw std::runtime_error("grid step must be positive");
  if (stop < start) throw std::runtime_error("grid stop before start");
  const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> values;
  values.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) values.push_back(start + step * static_cast<double>(i));
  return values;
}

Vec2 parse_point(const std::string& spec) {
  double a = 0, b = 0, c = 0, d = 0;
  char extra = 0;
  if (std::sscanf(spec.c_str(), "%lf,%lf,%lf,%lf%c", &a, &b, &c, &d, &extra) != 4)
    throw std::runtime_error("point must be re1,im1,re2,im2");
  return {Complex(a, b), Complex(c, d)};
}

LinearFractionalMap load_input(const RunConfig& config) {
  if (config.input_path.empty()) throw std::runtime_error("--input is required");
  return load_map(config.input_path);
}

void require_self_map(const LinearFractionalMap& phi, const RunConfig& config) {
  const SelfMapReport r = self_map_check(phi, config.samples, config.seed);
  if (r.violations > 0) {
    std::ostringstream msg;
    msg << "not a self-map of the ball: " << r.violations << " of " << config.samples
        << " samples leave it (max image norm " << fmt(r.worst_margin) << ")";
    fail(Errc::Precondition, msg.str());
  }
}

const std::vector<double> kLawGrid = {0.0, 0.25, 0.5, 1.0, 2.0};

int cmd_classify(const RunConfig& config, std::ostream& out) {
  const LinearFractionalMap phi = load_input(config);
  require_self_map(phi, config);
  const ModelClass mc = classify(phi);

  Output output(config, out);
  std::ostream& os = output.stream();
  const char* location = mc.location == Location::Interior ? "interior" : "boundary";
  if (config.format == "json") {
    json eigs = json::array();
    for (const auto& [value, mult] : mc.eigenvalues)
      eigs.push_back({{"value", complex_to_json(value)}, {"multiplicity", mult}});
    json blocks = json::array();
    for (const auto& b : mc.decomp.blocks)
      blocks.push_back({{"eigenvalue", complex_to_json(b.eigenvalue)}, {"size", b.size}});
    const json j{{"dw_point", json::array({complex_to_json(mc.dw.location.x),
                                           complex_to_json(mc.dw.location.y)})},
                 {"location", location},
                 {"multiplicity", mc.multiplicity},
                 {"domain", domain_name(mc.domain)},
                 {"eigenvalues", eigs},
                 {"jordan_blocks", blocks},
                 {"standardized_lambda", complex_to_json(mc.standardized_lambda)},
                 {"sigma_matrix", mat3_to_json(canonicalize(raw_matrix(mc.sigma_map)))},
                 {"phi_matrix", mat3_to_json(canonicalize(raw_matrix(mc.model_map)))}};
    os << j.dump(2) << "\n";
  } else {
    os << "denjoy-wolff point: (" << fmt_complex(mc.dw.location.x) << ", "
       << fmt_complex(mc.dw.location.y) << ") [" << location << "]\n";
    os << "multiplicity: " << mc.multiplicity << "\n";
    os << "characteristic domain: " << domain_name(mc.domain) << "\n";
    os << "eigenvalues:";
    for (const auto& [value, mult] : mc.eigenvalues)
      os << " " << fmt_complex(value) << " (x" << mult << ")";
    os << "\n";
    os << "standardized lambda: " << fmt_complex(mc.standardized_lambda) << "\n";
    os << "sigma:    " << fmt_matrix(canonicalize(raw_matrix(mc.sigma_map))) << "\n";
    os << "Phi:      " << fmt_matrix(canonicalize(raw_matrix(mc.model_map))) << "\n";
  }
  return kExitOk;
}

int cmd_embed(const RunConfig& config, std::ostream& out) {
  if (!config.t.has_value()) throw std::runtime_error("--t is required for embed");
  const LinearFractionalMap phi = load_input(config);
  require_self_map(phi, config);
  const JordanDecomposition decomp = jordan_form(raw_matrix(phi));
  const SemigroupElement el = phi_t(decomp, *config.t);

  Output output(config, out);
  const json j{{"t", el.t},
               {"map", map_to_json(el.map)},
               {"associated_matrix", mat3_to_json(canonicalize(raw_matrix(el.map)))},
               {"extrapolated", el.extrapolated},
               {"branch_warning", el.branch_warning}};
  output.stream() << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_orbit(const RunConfig& config, std::ostream& out) {
  if (!config.z0.has_value()) throw std::runtime_error("--z0 is required for orbit");
  if (!config.t_grid.has_value()) throw std::runtime_error("--t-grid is required for orbit");
  const Vec2 z0 = parse_point(*config.z0);
  if (z0.norm_sq() >= 1.0) throw std::runtime_error("z0 outside the open unit ball");
  const std::vector<double> grid = parse_grid(*config.t_grid);

  const LinearFractionalMap phi = load_input(config);
  const JordanDecomposition decomp = jordan_form(raw_matrix(phi));
  const auto points = orbit(decomp, z0, grid);

  Output output(config, out);
  write_orbit_csv(output.stream(), points);
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const LinearFractionalMap phi = load_input(config);
  std::vector<Check> checks;

  const SelfMapReport sm = self_map_check(phi, config.samples, config.seed);
  Check self_map = make_check("self_map", sm.worst_margin, 1.0);
  self_map.pass = sm.violations == 0;
  checks.push_back(self_map);

  if (sm.violations == 0) {
    const std::vector<FixedPoint> fps = fixed_points(phi);  // DegenerateAllFixed for identity
    double fp_residual = 0.0;
    for (const auto& fp : fps) {
      if (fp.at_infinity) continue;
      const double res = (eval(phi, fp.location) - fp.location).norm() / (1.0 + fp.location.norm());
      fp_residual = std::max(fp_residual, res);
    }
    checks.push_back(make_check("fixed_point_residual", fp_residual, config.tolerance));

    const JordanDecomposition decomp = jordan_form(raw_matrix(phi));
    const SemigroupReport sg = verify_semigroup(decomp, kLawGrid, kLawGrid, 100, config.seed);
    checks.push_back(make_check("semigroup_matrix_law", sg.max_matrix_residual, config.tolerance));
    checks.push_back(
        make_check("semigroup_pointwise_law", sg.max_pointwise_residual, config.tolerance));
    Check ball = make_check("ball_preservation",
                            std::max(0.0, sg.worst_norm * sg.worst_norm - 1.0), 1e-9);
    ball.pass = sg.ball_exits == 0;
    checks.push_back(ball);
  }

  const int exit_code = report_exit(checks);
  Output output(config, out);
  if (config.format == "json")
    output.stream() << report_json(checks, exit_code).dump(2) << "\n";
  else
    print_report_text(output.stream(), checks);
  return exit_code;
}

int cmd_reproduce_paper(const RunConfig& config, std::ostream& out) {
  const double tolerance = config.tolerance;
  std::vector<Check> checks;

  // Worked example 1: the triple-block map and its closed-form flow matrix.
  {
    const LinearFractionalMap phi = reference::triple_block_map();
    const JordanDecomposition decomp = jordan_form(raw_matrix(phi));

    double flow_res = 0.0;
    for (const double t : {0.0, 0.5, 1.0, 2.0, 3.7, 10.0}) {
      const Mat3 got = canonicalize(raw_matrix(phi_t(decomp, t).map));
      const Mat3 want = canonicalize(reference::triple_block_flow_matrix(t));
      flow_res = std::max(flow_res, (got - want).frobenius_norm());
    }
    checks.push_back(make_check("example1_flow_matrix", flow_res, tolerance));

    checks.push_back(make_check(
        "example1_anchor_t0",
        (canonicalize(raw_matrix(phi_t(decomp, 0.0).map)) - canonicalize(Mat3::identity()))
            .frobenius_norm(),
        tolerance));
    checks.push_back(make_check(
        "example1_anchor_t1",
        (canonicalize(raw_matrix(phi_t(decomp, 1.0).map)) - canonicalize(raw_matrix(phi)))
            .frobenius_norm(),
        tolerance));

    const SemigroupReport sg = verify_semigroup(decomp, kLawGrid, kLawGrid, 100, config.seed);
    checks.push_back(make_check("example1_matrix_law", sg.max_matrix_residual, tolerance));
    checks.push_back(make_check("example1_pointwise_law", sg.max_pointwise_residual, tolerance));

    const Vec2 at50 = eval(phi_t(decomp, 50.0).map, Vec2{0.0, 0.0});
    checks.push_back(make_check("example1_dw_orbit", (at50 - Vec2{1.0, 0.0}).norm(), 0.05));
  }

  // Worked example 2: Heisenberg model and the analytic square-root map.
  {
    checks.push_back(
        make_check("example2_model_matrix",
                   (canonicalize(raw_matrix(heisenberg(reference::heisenberg_b()))) -
                    canonicalize(reference::heisenberg_matrix()))
                       .frobenius_norm(),
                   tolerance));

    double coeff_res = 0.0;
    const JordanDecomposition hdec = jordan_form(reference::heisenberg_matrix());
    for (const double t : {0.0, 1.0, 2.0, 3.0, 4.0}) {
      const Mat3 got = canonicalize(raw_matrix(phi_t(hdec, t).map));
      const Mat3 want = canonicalize(reference::heisenberg_flow_matrix(t));
      coeff_res = std::max(coeff_res, (got - want).frobenius_norm());
    }
    checks.push_back(make_check("example2_flow_coefficients", coeff_res, tolerance));

    UniformRng rng(config.seed);
    std::vector<Vec2> samples;
    for (int i = 0; i < 1000; ++i) samples.push_back(sample_ball(rng));

    double dual_res = 0.0;
    for (const double t : {0.0, 0.5, 1.0, 2.0})
      for (const Vec2& z : samples) {
        const Vec2 a = analytic_phi_t(t, z);
        const Vec2 b = analytic_phi_t_closed_form(t, z);
        dual_res = std::max(dual_res, (a - b).norm());
      }
    checks.push_back(make_check("example2_dual_pathway", dual_res, tolerance));

    double t0_res = 0.0, t1_res = 0.0;
    for (const Vec2& z : samples) {
      t0_res = std::max(t0_res, (analytic_phi_t(0.0, z) - z).norm());
      t1_res = std::max(t1_res,
                        (analytic_phi_t(1.0, z) - analytic_phi_t_closed_form(1.0, z)).norm());
    }
    checks.push_back(make_check("example2_anchor_t0", t0_res, tolerance));
    checks.push_back(make_check("example2_anchor_t1", t1_res, tolerance));
  }

  const int exit_code = report_exit(checks);
  Output output(config, out);
  if (config.format == "json")
    output.stream() << report_json(checks, exit_code).dump(2) << "\n";
  else
    print_report_text(output.stream(), checks);
  return exit_code;
}

}  // namespace

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "classify") return cmd_classify(config, out);
    if (config.command == "embed") return cmd_embed(config, out);
    if (config.command == "orbit") return cmd_orbit(config, out);
    if (config.command == "verify") return cmd_verify(config, out);
    if (config.command == "reproduce-paper") return cmd_reproduce_paper(config, out);
    err << "unknown command: " << config.command << "\n";
    return kExitParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitMathError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  }
}

}  // namespace lfmsemi::cli
