#pragma once

#include "lfmsemi/linalg.hpp"

namespace lfmsemi {

enum class DomainKind { WholeSpace, HalfSpace, SiegelHalfSpace, UnitBall };

const char* domain_name(DomainKind k);

// Strict membership: HalfSpace is Re z1 > 0, SiegelHalfSpace is
// Re z1 > |z2|^2, UnitBall is |z1|^2 + |z2|^2 < 1.
bool contains(DomainKind kind, const Vec2& z);

// Membership with slack, for verification code near a boundary.
bool contains_closed(DomainKind kind, const Vec2& z, double slack);

// Checks that t*u + (1-t)*w stays inside the (convex) domain. Requires both
// endpoints inside and kind in {HalfSpace, SiegelHalfSpace}.
bool convexity_witness(DomainKind kind, const Vec2& u, const Vec2& w, double t);

// Principal square root, arg in (-pi, pi]; values exactly on the negative
// real axis raise BranchCut rather than silently choosing a side.
Complex principal_sqrt(Complex w);

// Cayley map Psi(z) = ((1+z1)/(1-z1), z2/(1-z1)), ball -> Siegel half space,
// and its inverse Psi^{-1}(z) = ((z1-1)/(z1+1), 2 z2/(z1+1)).
Vec2 cayley(const Vec2& z);
Vec2 cayley_inv(const Vec2& z);

// omega(z) = (sqrt(2 z1), sqrt(z2)), a self-map of the Siegel half space;
// omega^{-1}(z) = (z1^2/2, z2^2).
Vec2 omega(const Vec2& z);
Vec2 omega_inv(const Vec2& z);

// sigma = omega . cayley in closed form, ball -> Siegel half space, with
// sigma^{-1}(z) = ((z1^2-2)/(z1^2+2), 4 z2^2/(z1^2+2)).
Vec2 sigma(const Vec2& z);
Vec2 sigma_inv(const Vec2& z);

}  // namespace lfmsemi
