#include "lfmsemi/reference_maps.hpp"

namespace lfmsemi::reference {

LinearFractionalMap triple_block_map() {
  return {Mat2{1.0, 2.0, -2.0, 2.0}, Vec2{1.0, 2.0}, Vec2{-1.0, 2.0}, Complex(3.0)};
}

Mat3 triple_block_matrix() {
  return Mat3{1.0, 2.0, 1.0, -2.0, 2.0, 2.0, -1.0, 2.0, 3.0};
}

Mat3 triple_block_flow_matrix(double t) {
  const double t2 = t * t;
  return Mat3{Complex((2.0 - t2) / 2.0), Complex(t),   Complex(t2 / 2.0),
              Complex(-t),               Complex(1.0), Complex(t),
              Complex(-t2 / 2.0),        Complex(t),   Complex((t2 + 2.0) / 2.0)};
}

Vec2 heisenberg_b() { return {0.5, 0.25}; }

Mat3 heisenberg_matrix() {
  return Mat3{1.0, 0.5, 0.5, 0.0, 1.0, 0.25, 0.0, 0.0, 1.0};
}

Mat3 heisenberg_flow_matrix(double t) {
  return Mat3{1.0, Complex(t / 2.0), Complex(t * (t + 7.0) / 16.0),
              0.0, 1.0,              Complex(t / 4.0),
              0.0, 0.0,              1.0};
}

LinearFractionalMap cayley_map() {
  return {Mat2::identity(), Vec2{1.0, 0.0}, Vec2{-1.0, 0.0}, Complex(1.0)};
}

}  // namespace lfmsemi::reference
