#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "lfmsemi/jordan.hpp"
#include "lfmsemi/lfm.hpp"

namespace lfmsemi {

enum class PowerRuleVariant { Diagonal, Jordan2, Jordan3 };

struct BlockPowerRule {
  PowerRuleVariant variant;
  std::vector<Complex> eigenvalues;
  Complex normalized_lambda{};  // 1/alpha, meaningful for Jordan3
};

BlockPowerRule power_rule(const std::vector<JordanBlock>& blocks);

// Lambda^t assembled block by block with principal-branch scalar powers:
//   1x1:  lambda^t
//   2x2:  [[lambda^t, t lambda^(t-1)], [0, lambda^t]]
//   3x3:  alpha^t [[1, t L, L^2 t(t-1)/2], [0, 1, t L], [0, 0, 1]], L = 1/alpha
// At integer t this equals the repeated matrix product up to roundoff.
Mat3 lambda_power_t(const std::vector<JordanBlock>& blocks, double t);

// True when any eigenvalue sits on the negative real axis, where the
// principal branch of lambda^t is a choice rather than a limit.
bool branch_ambiguity(const std::vector<JordanBlock>& blocks);

struct SemigroupElement {
  double t = 0.0;
  LinearFractionalMap map;
  JordanDecomposition parent;
  bool extrapolated = false;    // t < 0: formulas extend, guarantees do not
  bool branch_warning = false;  // eigenvalue on the negative real axis
};

// phi_t realized as from_matrix(S Lambda^t S^{-1}). Refuses (IllConditioned)
// when two distinct eigenvalue clusters are close enough that the diagonal
// and Jordan power rules diverge.
SemigroupElement phi_t(const JordanDecomposition& decomp, double t);

struct SemigroupReport {
  double max_matrix_residual = 0.0;     // canonical m_t m_s vs m_(t+s)
  double max_pointwise_residual = 0.0;  // phi_t(phi_s(z)) vs phi_(t+s)(z)
  int ball_exits = 0;                   // samples leaving the closed ball
  double worst_norm = 0.0;              // max ||phi_t(z)|| seen

  bool pass(double tolerance) const {
    return max_matrix_residual <= tolerance && max_pointwise_residual <= tolerance &&
           ball_exits == 0;
  }
};

SemigroupReport verify_semigroup(const JordanDecomposition& decomp,
                                 const std::vector<double>& t_grid,
                                 const std::vector<double>& s_grid, int z_samples, uint64_t seed,
                                 double ball_margin = 1e-9);

std::vector<std::pair<double, Vec2>> orbit(const JordanDecomposition& decomp, const Vec2& z0,
                                           const std::vector<double>& t_grid);

// CSV with header t,re1,im1,re2,im2; 17 significant digits per value.
void write_orbit_csv(std::ostream& os, const std::vector<std::pair<double, Vec2>>& points);

}  // namespace lfmsemi
