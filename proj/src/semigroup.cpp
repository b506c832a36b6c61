#include "lfmsemi/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "lfmsemi/sampling.hpp"

namespace lfmsemi {

namespace {

void require_valid_blocks(const std::vector<JordanBlock>& blocks) {
  int total = 0;
  for (const auto& b : blocks) {
    total += b.size;
    if (std::abs(b.eigenvalue) == 0.0) fail(Errc::ZeroEigenvalue, "zero eigenvalue has no power");
  }
  if (total != 3) fail(Errc::Precondition, "block sizes must sum to 3");
}

}  // namespace

BlockPowerRule power_rule(const std::vector<JordanBlock>& blocks) {
  require_valid_blocks(blocks);
  BlockPowerRule rule;
  int max_size = 1;
  for (const auto& b : blocks) {
    rule.eigenvalues.push_back(b.eigenvalue);
    max_size = std::max(max_size, b.size);
  }
  rule.variant = max_size == 1   ? PowerRuleVariant::Diagonal
                 : max_size == 2 ? PowerRuleVariant::Jordan2
                                 : PowerRuleVariant::Jordan3;
  if (rule.variant == PowerRuleVariant::Jordan3)
    rule.normalized_lambda = 1.0 / blocks.front().eigenvalue;
  return rule;
}

bool branch_ambiguity(const std::vector<JordanBlock>& blocks) {
  for (const auto& b : blocks)
    if (b.eigenvalue.imag() == 0.0 && b.eigenvalue.real() < 0.0) return true;
  return false;
}

Mat3 lambda_power_t(const std::vector<JordanBlock>& blocks, double t) {
  require_valid_blocks(blocks);
  Mat3 out;
  int off = 0;
  for (const auto& b : blocks) {
    const Complex lam = b.eigenvalue;
    if (b.size == 1) {
      out(off, off) = principal_pow(lam, t);
    } else if (b.size == 2) {
      const Complex p = principal_pow(lam, t);
      out(off, off) = p;
      out(off + 1, off + 1) = p;
      out(off, off + 1) = t * principal_pow(lam, t - 1.0);
    } else {
      const Complex alpha_t = principal_pow(lam, t);
      const Complex l = 1.0 / lam;
      out(off, off) = alpha_t;
      out(off + 1, off + 1) = alpha_t;
      out(off + 2, off + 2) = alpha_t;
      out(off, off + 1) = alpha_t * t * l;
      out(off + 1, off + 2) = alpha_t * t * l;
      out(off, off + 2) = alpha_t * l * l * t * (t - 1.0) / 2.0;
    }
    off += b.size;
  }
  return out;
}

SemigroupElement phi_t(const JordanDecomposition& decomp, double t) {
  // Distinct clusters too close together make the diagonal and Jordan power
  // rules irreconcilable; refuse instead of picking one.
  const double gap_tol = 10.0 * tol::cluster * std::max(decomp.source_norm, 1e-300);
  for (size_t i = 0; i < decomp.blocks.size(); ++i)
    for (size_t j = i + 1; j < decomp.blocks.size(); ++j) {
      const Complex li = decomp.blocks[i].eigenvalue, lj = decomp.blocks[j].eigenvalue;
      if (li != lj && std::abs(li - lj) <= gap_tol)
        fail(Errc::IllConditioned, "eigenvalue clusters too close to choose a power rule");
    }

  SemigroupElement el;
  el.t = t;
  el.parent = decomp;
  el.extrapolated = t < 0.0;
  el.branch_warning = branch_ambiguity(decomp.blocks);
  el.map = from_matrix(decomp.S * lambda_power_t(decomp.blocks, t) * decomp.S_inv);
  return el;
}

SemigroupReport verify_semigroup(const JordanDecomposition& decomp,
                                 const std::vector<double>& t_grid,
                                 const std::vector<double>& s_grid, int z_samples, uint64_t seed,
                                 double ball_margin) {
  SemigroupReport report;

  auto canonical_at = [&](double u) { return canonicalize(raw_matrix(phi_t(decomp, u).map)); };

  for (const double t : t_grid)
    for (const double s : s_grid) {
      const Mat3 law = canonicalize(canonical_at(t) * canonical_at(s));
      const double res = (law - canonical_at(t + s)).frobenius_norm();
      report.max_matrix_residual = std::max(report.max_matrix_residual, res);
    }

  UniformRng rng(seed);
  std::vector<Vec2> samples;
  samples.reserve(static_cast<size_t>(z_samples));
  for (int i = 0; i < z_samples; ++i) samples.push_back(sample_ball(rng));

  for (const double t : t_grid) {
    const LinearFractionalMap map_t = phi_t(decomp, t).map;
    for (const double s : s_grid) {
      const LinearFractionalMap map_s = phi_t(decomp, s).map;
      const LinearFractionalMap map_ts = phi_t(decomp, t + s).map;
      for (const Vec2& z : samples) {
        const Vec2 a = eval(map_t, eval(map_s, z));
        const Vec2 b = eval(map_ts, z);
        report.max_pointwise_residual = std::max(report.max_pointwise_residual, (a - b).norm());
      }
    }
    for (const Vec2& z : samples) {
      const double n = eval(map_t, z).norm();
      report.worst_norm = std::max(report.worst_norm, n);
      if (n * n > 1.0 + ball_margin) ++report.ball_exits;
    }
  }
  return report;
}

std::vector<std::pair<double, Vec2>> orbit(const JordanDecomposition& decomp, const Vec2& z0,
                                           const std::vector<double>& t_grid) {
  if (z0.norm_sq() >= 1.0) fail(Errc::Precondition, "orbit start outside the open ball");
  std::vector<std::pair<double, Vec2>> out;
  out.reserve(t_grid.size());
  for (const double t : t_grid) out.emplace_back(t, eval(phi_t(decomp, t).map, z0));
  return out;
}

void write_orbit_csv(std::ostream& os, const std::vector<std::pair<double, Vec2>>& points) {
  os << "t,re1,im1,re2,im2\n";
  char buf[160];
  for (const auto& [t, z] : points) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g\n", t, z.x.real(), z.x.imag(),
                  z.y.real(), z.y.imag());
    os << buf;
  }
}

}  // namespace lfmsemi
