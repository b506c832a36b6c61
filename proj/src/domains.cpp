#include "lfmsemi/domains.hpp"

#include <cmath>

namespace lfmsemi {

const char* domain_name(DomainKind k) {
  switch (k) {
    case DomainKind::WholeSpace: return "whole space";
    case DomainKind::HalfSpace: return "half space";
    case DomainKind::SiegelHalfSpace: return "Siegel half space";
    case DomainKind::UnitBall: return "unit ball";
  }
  return "?";
}

bool contains(DomainKind kind, const Vec2& z) {
  switch (kind) {
    case DomainKind::WholeSpace: return true;
    case DomainKind::HalfSpace: return z.x.real() > 0.0;
    case DomainKind::SiegelHalfSpace: return z.x.real() > std::norm(z.y);
    case DomainKind::UnitBall: return z.norm_sq() < 1.0;
  }
  return false;
}

bool contains_closed(DomainKind kind, const Vec2& z, double slack) {
  switch (kind) {
    case DomainKind::WholeSpace: return true;
    case DomainKind::HalfSpace: return z.x.real() > -slack;
    case DomainKind::SiegelHalfSpace: return z.x.real() > std::norm(z.y) - slack;
    case DomainKind::UnitBall: return z.norm_sq() < 1.0 + slack;
  }
  return false;
}

bool convexity_witness(DomainKind kind, const Vec2& u, const Vec2& w, double t) {
  if (kind != DomainKind::HalfSpace && kind != DomainKind::SiegelHalfSpace)
    fail(Errc::Precondition, "convexity witness needs a half-space kind");
  if (t < 0.0 || t > 1.0) fail(Errc::Precondition, "t outside [0, 1]");
  if (!contains(kind, u) || !contains(kind, w))
    fail(Errc::Precondition, "endpoint outside the domain");
  return contains(kind, t * u + (1.0 - t) * w);
}

Complex principal_sqrt(Complex w) {
  if (w.imag() == 0.0 && w.real() < 0.0)
    fail(Errc::BranchCut, "square root argument on the negative real axis");
  return std::sqrt(w);
}

Vec2 cayley(const Vec2& z) {
  const Complex den = 1.0 - z.x;
  if (std::abs(den) <= 1e-12 * (std::abs(z.x) + 1.0)) fail(Errc::PoleAtPoint, "z1 = 1");
  return {(1.0 + z.x) / den, z.y / den};
}

Vec2 cayley_inv(const Vec2& z) {
  const Complex den = z.x + 1.0;
  if (std::abs(den) <= 1e-12 * (std::abs(z.x) + 1.0)) fail(Errc::PoleAtPoint, "z1 = -1");
  return {(z.x - 1.0) / den, 2.0 * z.y / den};
}

Vec2 omega(const Vec2& z) {
  if (z.x.real() <= 0.0) fail(Errc::BranchCut, "Re z1 <= 0");
  return {principal_sqrt(2.0 * z.x), principal_sqrt(z.y)};
}

Vec2 omega_inv(const Vec2& z) { return {z.x * z.x / 2.0, z.y * z.y}; }

Vec2 sigma(const Vec2& z) {
  const Complex den = 1.0 - z.x;
  if (std::abs(den) <= 1e-12 * (std::abs(z.x) + 1.0)) fail(Errc::PoleAtPoint, "z1 = 1");
  return {principal_sqrt(2.0 * (z.x + 1.0) / den), principal_sqrt(z.y / den)};
}

Vec2 sigma_inv(const Vec2& z) {
  const Complex s = z.x * z.x;
  const Complex den = s + 2.0;
  if (std::abs(den) <= 1e-12 * (std::abs(s) + 2.0)) fail(Errc::PoleAtPoint, "z1^2 = -2");
  return {(s - 2.0) / den, 4.0 * z.y * z.y / den};
}

}  // namespace lfmsemi
