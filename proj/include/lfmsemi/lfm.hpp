#pragma once

#include <cstdint>
#include <vector>

#include "lfmsemi/jordan.hpp"
#include "lfmsemi/linalg.hpp"

namespace lfmsemi {

// phi(z) = (A z + B) / (<z, C> + D) on C^2, with <z, C> the standard
// Hermitian product (C's entries conjugated).
struct LinearFractionalMap {
  Mat2 A;
  Vec2 B;
  Vec2 C;
  Complex D{1.0};

  LinearFractionalMap() : A(Mat2::identity()) {}
  LinearFractionalMap(const Mat2& a, const Vec2& b, const Vec2& c, Complex d);
};

// 3x3 block matrix [[A, B], [C*, D]] acting on homogeneous coordinates,
// held in canonical normalization: scaled so D = 1 when |D| is not tiny,
// otherwise unit Frobenius norm with the first significant entry (row-major)
// made positive real.
struct AssociatedMatrix {
  Mat3 m;

  explicit AssociatedMatrix(const Mat3& raw);
};

Mat3 canonicalize(const Mat3& m);
bool projectively_equal(const Mat3& a, const Mat3& b, double tolerance = 1e-9);

enum class PointClass { Interior, Boundary, Exterior, Infinity };

const char* point_class_name(PointClass c);

struct FixedPoint {
  bool at_infinity = false;
  Vec2 location;     // valid when not at infinity
  Vec3 homogeneous;  // last coordinate 1 when finite
  Complex eigenvalue;
  PointClass cls = PointClass::Infinity;
  int block_size = 1;  // size of the Jordan block this point came from
};

struct SelfMapReport {
  int violations = 0;        // samples with ||phi(z)|| >= 1
  double worst_margin = 0.;  // max of ||phi(z)|| over the sample
};

LinearFractionalMap identity_map();

// Associated matrix exactly as stored, no normalization.
Mat3 raw_matrix(const LinearFractionalMap& phi);

AssociatedMatrix to_matrix(const LinearFractionalMap& phi);
LinearFractionalMap from_matrix(const AssociatedMatrix& m);
LinearFractionalMap from_matrix(const Mat3& raw);

bool is_invertible(const LinearFractionalMap& phi);
bool is_identity(const LinearFractionalMap& phi, double tolerance = 1e-12);

Vec2 eval(const LinearFractionalMap& phi, const Vec2& z);

LinearFractionalMap compose(const LinearFractionalMap& f, const LinearFractionalMap& g);
LinearFractionalMap inverse(const LinearFractionalMap& phi);

std::vector<FixedPoint> fixed_points(const LinearFractionalMap& phi);
// Chain heads of an existing decomposition of the map's associated matrix.
std::vector<FixedPoint> fixed_points_from_decomposition(const JordanDecomposition& d);

// Samples n points uniformly in the ball (deterministic given seed) and
// reports how many land on or outside the unit sphere under phi.
SelfMapReport self_map_check(const LinearFractionalMap& phi, int n_samples, uint64_t seed);

}  // namespace lfmsemi
