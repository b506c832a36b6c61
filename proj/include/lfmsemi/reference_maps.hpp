#pragma once

#include "lfmsemi/lfm.hpp"

namespace lfmsemi::reference {

// The worked triple-block self-map
//   phi(z) = ((z1 + 2 z2 + 1)/(-z1 + 2 z2 + 3), (-2 z1 + 2 z2 + 2)/(-z1 + 2 z2 + 3)),
// which fixes (1, 0) with multiplicity three.
LinearFractionalMap triple_block_map();
Mat3 triple_block_matrix();

// Closed form of the associated matrix of its continuous iterate:
// [[(2-t^2)/2, t, t^2/2], [-t, 1, t], [-t^2/2, t, (t^2+2)/2]].
Mat3 triple_block_flow_matrix(double t);

// Heisenberg translation data of the analytic worked example.
Vec2 heisenberg_b();           // (1/2, 1/4)
Mat3 heisenberg_matrix();      // [[1, 1/2, 1/2], [0, 1, 1/4], [0, 0, 1]]
Mat3 heisenberg_flow_matrix(double t);  // [[1, t/2, t(t+7)/16], [0, 1, t/4], [0, 0, 1]]

// Cayley map as a linear fractional map (ball into Siegel half space).
LinearFractionalMap cayley_map();

}  // namespace lfmsemi::reference
