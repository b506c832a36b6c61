#include "lfmsemi/model.hpp"

#include <cmath>
#include <limits>

namespace lfmsemi {

namespace {

constexpr int kMaxOrbitSteps = 100000;
constexpr double kOrbitStepTol = 1e-10;
// Parabolic orbits only close in on the boundary point like 1/n, so the
// step cap leaves them ~1e-5 away; accept matches well above that.
constexpr double kMatchTol = 1e-3;

Vec2 orbit_limit_from_origin(const LinearFractionalMap& phi) {
  Vec2 z{0.0, 0.0};
  for (int n = 0; n < kMaxOrbitSteps; ++n) {
    Vec2 w;
    try {
      w = eval(phi, z);
    } catch (const Error&) {
      fail(Errc::NoConvergence, "orbit hit a pole");
    }
    const double step = (w - z).norm();
    z = w;
    if (step < kOrbitStepTol) break;
  }
  return z;
}

}  // namespace

FixedPoint select_dw_boundary(const Vec2& orbit_limit, const std::vector<FixedPoint>& fps) {
  const FixedPoint* best = nullptr;
  double d1 = std::numeric_limits<double>::infinity();
  double d2 = std::numeric_limits<double>::infinity();
  for (const auto& fp : fps) {
    if (fp.at_infinity || fp.cls != PointClass::Boundary) continue;
    const double d = (fp.location - orbit_limit).norm();
    if (d < d1) {
      d2 = d1;
      d1 = d;
      best = &fp;
    } else if (d < d2) {
      d2 = d;
    }
  }
  if (best == nullptr || d1 > kMatchTol)
    fail(Errc::NoConvergence, "orbit limit matches no boundary fixed point");
  if (d2 <= 10.0 * d1 + 1e-9)
    fail(Errc::AmbiguousDenjoyWolff, "two boundary fixed points near the orbit limit");
  return *best;
}

ModelClass classify(const LinearFractionalMap& phi) {
  if (is_identity(phi)) fail(Errc::DegenerateAllFixed, "identity map has no model");

  const Mat3 m = raw_matrix(phi);
  ModelClass mc;
  mc.decomp = jordan_form(m);
  mc.eigenvalues = eigenvalues3(m);

  const auto fps = fixed_points_from_decomposition(mc.decomp);
  FixedPoint dw;
  bool interior = false;
  for (const auto& fp : fps)
    if (!fp.at_infinity && fp.cls == PointClass::Interior) {
      dw = fp;
      interior = true;
      break;
    }

  if (interior) {
    mc.location = Location::Interior;
  } else {
    mc.location = Location::Boundary;
    dw = select_dw_boundary(orbit_limit_from_origin(phi), fps);
  }

  mc.dw = dw;
  mc.dw_eigenvalue = dw.eigenvalue;
  mc.multiplicity = dw.block_size;
  mc.standardized_lambda = 1.0 / dw.eigenvalue;

  if (mc.location == Location::Interior) {
    mc.domain = DomainKind::WholeSpace;
  } else {
    // Multiplicity two sits in the half space; one and three are Siegel-type
    // (diagonal Phi resp. a Heisenberg translation).
    mc.domain = mc.multiplicity == 2 ? DomainKind::HalfSpace : DomainKind::SiegelHalfSpace;
  }

  mc.sigma_map = from_matrix(mc.decomp.S_inv);
  mc.model_map = from_matrix(mc.decomp.jordan_matrix());
  return mc;
}

LinearFractionalMap heisenberg(const Vec2& b) {
  return {Mat2{1.0, 2.0 * std::conj(b.y), 0.0, 1.0}, b, Vec2{0.0, 0.0}, Complex(1.0)};
}

LinearFractionalMap HeisenbergTranslation::map() const { return heisenberg(b); }

AnalyticModelMap square_root_heisenberg_model() {
  AnalyticModelMap m;
  m.forward = [](const Vec2& z) { return sigma(z); };
  m.backward = [](const Vec2& w) { return sigma_inv(w); };
  m.model_flow = [](double t, const Vec2& w) {
    return Vec2{w.x + (t / 2.0) * w.y + t * (t + 7.0) / 16.0, w.y + t / 4.0};
  };
  return m;
}

Vec2 analytic_phi_t(double t, const Vec2& z) {
  static const AnalyticModelMap model = square_root_heisenberg_model();
  return model.at(t, z);
}

Vec2 analytic_phi(const Vec2& z) { return analytic_phi_t(1.0, z); }

Vec2 analytic_phi_t_closed_form(double t, const Vec2& z) {
  const Complex den = 1.0 - z.x;
  if (std::abs(den) <= 1e-12 * (std::abs(z.x) + 1.0)) fail(Errc::PoleAtPoint, "z1 = 1");
  const Complex s1 = principal_sqrt(2.0 * (z.x + 1.0) / den);
  const Complex s2 = principal_sqrt(z.y / den);
  // Radicals as the transport produces them: products of principal roots,
  // not principal roots of products (those differ by sign on part of the
  // ball). r1 ~ sqrt(2 z2 (z1+1)), r2 ~ sqrt(2 (1-z1^2)), r3 ~ sqrt(z2 (1-z1)).
  const Complex r1 = s1 * s2 * den;
  const Complex r2 = s1 * den;
  const Complex r3 = s2 * den;

  const double c2 = t * t;
  const double c7 = t + 7.0;
  const Complex shared = 64.0 * c2 * z.y + c2 * c7 * c7 * (1.0 - z.x) + 256.0 * t * r1 +
                         32.0 * t * c7 * r2 + 16.0 * c2 * c7 * r3;
  const Complex a = 1024.0 * z.x + shared;
  const Complex b = 1024.0 + shared;
  const Complex c = 64.0 * c2 * (1.0 - z.x) + 1024.0 * z.y + 512.0 * t * r3;
  if (std::abs(b) <= 1e-12) fail(Errc::PoleAtPoint, "closed-form denominator vanishes");
  return {a / b, c / b};
}

}  // namespace lfmsemi
