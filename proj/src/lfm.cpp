#include "lfmsemi/lfm.hpp"

#include <cmath>
#include <limits>

#include "lfmsemi/sampling.hpp"

namespace lfmsemi {

LinearFractionalMap::LinearFractionalMap(const Mat2& a, const Vec2& b, const Vec2& c, Complex d)
    : A(a), B(b), C(c), D(d) {
  if (!finite(d)) fail(Errc::Precondition, "non-finite D");
  if (raw_matrix(*this).frobenius_norm() == 0.0)
    fail(Errc::Precondition, "zero associated matrix");
}

LinearFractionalMap identity_map() {
  return {Mat2::identity(), Vec2{0.0, 0.0}, Vec2{0.0, 0.0}, Complex(1.0)};
}

Mat3 raw_matrix(const LinearFractionalMap& phi) {
  Mat3 m;
  m(0, 0) = phi.A(0, 0);
  m(0, 1) = phi.A(0, 1);
  m(1, 0) = phi.A(1, 0);
  m(1, 1) = phi.A(1, 1);
  m(0, 2) = phi.B.x;
  m(1, 2) = phi.B.y;
  m(2, 0) = std::conj(phi.C.x);
  m(2, 1) = std::conj(phi.C.y);
  m(2, 2) = phi.D;
  return m;
}

Mat3 canonicalize(const Mat3& m) {
  const double n = m.frobenius_norm();
  if (n == 0.0) fail(Errc::Precondition, "zero matrix has no canonical form");
  const Complex d = m(2, 2);
  if (std::abs(d) > 1e-10 * n) return (1.0 / d) * m;
  Mat3 u = Complex(1.0 / n) * m;
  for (const auto& entry : u.e) {
    if (std::abs(entry) > 1e-12) return (std::abs(entry) / entry) * u;
  }
  return u;
}

AssociatedMatrix::AssociatedMatrix(const Mat3& raw) : m(canonicalize(raw)) {}

bool projectively_equal(const Mat3& a, const Mat3& b, double tolerance) {
  return (canonicalize(a) - canonicalize(b)).frobenius_norm() <= tolerance;
}

AssociatedMatrix to_matrix(const LinearFractionalMap& phi) {
  return AssociatedMatrix(raw_matrix(phi));
}

LinearFractionalMap from_matrix(const AssociatedMatrix& am) {
  const Mat3& m = am.m;
  const double n = m.frobenius_norm();
  if (std::abs(det3(m)) <= tol::singular * n * n * n)
    fail(Errc::SingularMatrix, "associated matrix not invertible");
  return {Mat2{m(0, 0), m(0, 1), m(1, 0), m(1, 1)},
          Vec2{m(0, 2), m(1, 2)},
          Vec2{std::conj(m(2, 0)), std::conj(m(2, 1))},
          m(2, 2)};
}

LinearFractionalMap from_matrix(const Mat3& raw) { return from_matrix(AssociatedMatrix(raw)); }

bool is_invertible(const LinearFractionalMap& phi) {
  const Mat3 m = raw_matrix(phi);
  const double n = m.frobenius_norm();
  return std::abs(det3(m)) > tol::singular * n * n * n;
}

bool is_identity(const LinearFractionalMap& phi, double tolerance) {
  return projectively_equal(raw_matrix(phi), Mat3::identity(), tolerance);
}

Vec2 eval(const LinearFractionalMap& phi, const Vec2& z) {
  const Complex den = inner(z, phi.C) + phi.D;
  const double scale = phi.C.norm() * z.norm() + std::abs(phi.D) + 1.0;
  if (std::abs(den) <= 1e-12 * scale) fail(Errc::PoleAtPoint, "denominator vanishes");
  const Vec2 num = phi.A * z + phi.B;
  return {num.x / den, num.y / den};
}

LinearFractionalMap compose(const LinearFractionalMap& f, const LinearFractionalMap& g) {
  const Mat3 p = raw_matrix(f) * raw_matrix(g);
  const double n = p.frobenius_norm();
  if (n == 0.0 || std::abs(det3(p)) <= tol::singular * n * n * n)
    fail(Errc::DegenerateComposition, "composed associated matrix is singular");
  return from_matrix(p);
}

LinearFractionalMap inverse(const LinearFractionalMap& phi) {
  return from_matrix(mat_inverse(raw_matrix(phi)));
}

std::vector<FixedPoint> fixed_points_from_decomposition(const JordanDecomposition& d) {
  std::vector<FixedPoint> out;
  for (size_t b = 0; b < d.blocks.size(); ++b) {
    const Vec3 v = d.S.col(d.block_offset(static_cast<int>(b)));
    FixedPoint fp;
    fp.eigenvalue = d.blocks[b].eigenvalue;
    fp.block_size = d.blocks[b].size;
    if (std::abs(v[2]) > 1e-9 * v.norm()) {
      fp.at_infinity = false;
      fp.location = {v[0] / v[2], v[1] / v[2]};
      fp.homogeneous = {fp.location.x, fp.location.y, Complex(1.0)};
      const double r = fp.location.norm();
      if (r < 1.0 - tol::boundary)
        fp.cls = PointClass::Interior;
      else if (std::abs(r - 1.0) <= tol::boundary)
        fp.cls = PointClass::Boundary;
      else
        fp.cls = PointClass::Exterior;
    } else {
      fp.at_infinity = true;
      fp.homogeneous = Complex(1.0 / v.norm()) * v;
      fp.cls = PointClass::Infinity;
    }
    out.push_back(fp);
  }
  return out;
}

std::vector<FixedPoint> fixed_points(const LinearFractionalMap& phi) {
  if (is_identity(phi)) fail(Errc::DegenerateAllFixed, "every point is fixed");
  return fixed_points_from_decomposition(jordan_form(raw_matrix(phi)));
}

SelfMapReport self_map_check(const LinearFractionalMap& phi, int n_samples, uint64_t seed) {
  UniformRng rng(seed);
  SelfMapReport report;
  for (int i = 0; i < n_samples; ++i) {
    const Vec2 z = sample_ball(rng);
    double image_norm;
    try {
      image_norm = eval(phi, z).norm();
    } catch (const Error&) {
      image_norm = std::numeric_limits<double>::infinity();  // pole inside the ball
    }
    if (image_norm >= 1.0) ++report.violations;
    report.worst_margin = std::max(report.worst_margin, image_norm);
  }
  return report;
}

const char* point_class_name(PointClass c) {
  switch (c) {
    case PointClass::Interior: return "interior";
    case PointClass::Boundary: return "boundary";
    case PointClass::Exterior: return "exterior";
    case PointClass::Infinity: return "infinity";
  }
  return "?";
}

}  // namespace lfmsemi
