#include <doctest.h>

#include "lfmsemi/lfm.hpp"
#include "lfmsemi/reference_maps.hpp"
#include "lfmsemi/semigroup.hpp"
#include "testutil.hpp"

using namespace lfmsemi;

namespace {

LinearFractionalMap random_map(UniformRng& rng) {
  for (;;) {
    const Mat3 m = testutil::random_mat3(rng);
    const double n = m.frobenius_norm();
    if (std::abs(det3(m)) > 1e-2 * n * n * n) return from_matrix(m);
  }
}

}  // namespace

TEST_CASE("evaluation of the worked self-map") {
  const LinearFractionalMap phi = reference::triple_block_map();
  CHECK((eval(phi, Vec2{1.0, 0.0}) - Vec2{1.0, 0.0}).norm() < 1e-15);
  const Vec2 at0 = eval(phi, Vec2{0.0, 0.0});
  CHECK((at0 - Vec2{1.0 / 3.0, 2.0 / 3.0}).norm() < 1e-15);
  CHECK(at0.norm() < 1.0);
}

TEST_CASE("identity map evaluates to its argument") {
  const LinearFractionalMap id = identity_map();
  UniformRng rng(3);
  for (int i = 0; i < 20; ++i) {
    const Vec2 z = sample_ball(rng);
    CHECK((eval(id, z) - z).norm() == 0.0);
  }
}

TEST_CASE("pole raises") {
  // phi(z) = (z1, z2) / (z1): pole along z1 = 0.
  const LinearFractionalMap phi{Mat2::identity(), Vec2{0.0, 0.0}, Vec2{1.0, 0.0}, Complex(0.0)};
  CHECK_THROWS_AS((void)eval(phi, Vec2{0.0, 0.5}), Error);
}

TEST_CASE("associated matrix of the worked map") {
  const Mat3 m = raw_matrix(reference::triple_block_map());
  CHECK((m - reference::triple_block_matrix()).frobenius_norm() == 0.0);
  CHECK(projectively_equal(to_matrix(reference::triple_block_map()).m,
                           reference::triple_block_matrix(), 1e-12));
}

TEST_CASE("identity map has the identity matrix") {
  CHECK(projectively_equal(raw_matrix(identity_map()), Mat3::identity(), 0.0));
  CHECK(is_identity(identity_map()));
}

TEST_CASE("matrix round trip is projective") {
  UniformRng rng(5);
  for (int i = 0; i < 100; ++i) {
    const Mat3 m = testutil::random_well_conditioned(rng);
    const LinearFractionalMap phi = from_matrix(m);
    CHECK(projectively_equal(raw_matrix(phi), m, 1e-10));
  }
}

TEST_CASE("canonical form falls back to unit norm when D vanishes") {
  // Anti-diagonal: invertible, but the (2,2) entry is zero.
  const Mat3 m{0.0, 0.0, 2.0, 0.0, 2.0, 0.0, 2.0, 0.0, 0.0};
  const Mat3 c = canonicalize(m);
  CHECK(c.frobenius_norm() == doctest::Approx(1.0));
  // First significant entry (row-major) is positive real.
  CHECK(c(0, 2).real() > 0.0);
  CHECK(c(0, 2).imag() == 0.0);
  CHECK(projectively_equal(m, Complex(0.0, 3.0) * m, 1e-12));
}

TEST_CASE("projective invariance of from_matrix") {
  UniformRng rng(37);
  const Mat3 m = testutil::random_well_conditioned(rng);
  // Scaling by a power of two is exact arithmetic.
  const Mat3 scaled = Complex(4.0) * m;
  const Mat3 a = canonicalize(m), b = canonicalize(scaled);
  CHECK((a - b).frobenius_norm() == 0.0);
  // Generic scalars agree to rounding.
  const Mat3 c = canonicalize(Complex(0.3, -1.7) * m);
  CHECK((a - c).frobenius_norm() < 1e-13);
}

TEST_CASE("composition with the identity") {
  const LinearFractionalMap phi = reference::triple_block_map();
  const LinearFractionalMap composed = compose(phi, identity_map());
  CHECK(projectively_equal(raw_matrix(composed), raw_matrix(phi), 1e-12));
}

TEST_CASE("half-step composed with itself gives the worked map") {
  const JordanDecomposition d = jordan_form(reference::triple_block_matrix());
  const LinearFractionalMap half = phi_t(d, 0.5).map;
  CHECK(projectively_equal(raw_matrix(compose(half, half)),
                           raw_matrix(reference::triple_block_map()), 1e-10));
}

TEST_CASE("composition agrees with pointwise composition") {
  UniformRng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const LinearFractionalMap f = random_map(rng);
    const LinearFractionalMap g = random_map(rng);
    const LinearFractionalMap fg = compose(f, g);
    for (int i = 0; i < 10; ++i) {
      const Vec2 z = sample_ball(rng);
      Vec2 direct, through;
      try {
        direct = eval(f, eval(g, z));
        through = eval(fg, z);
      } catch (const Error&) {
        continue;  // pole in the sample; nothing to compare
      }
      CHECK((direct - through).norm() < 1e-10 * (1.0 + direct.norm()));
    }
  }
}

TEST_CASE("composition is matrix multiplication") {
  UniformRng rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const LinearFractionalMap f = random_map(rng);
    const LinearFractionalMap g = random_map(rng);
    CHECK(projectively_equal(raw_matrix(compose(f, g)),
                             mat_mul(raw_matrix(f), raw_matrix(g)), 1e-10));
  }
}

TEST_CASE("iterates follow the matrix power law") {
  UniformRng rng(47);
  const LinearFractionalMap phi = reference::triple_block_map();
  LinearFractionalMap iterate = identity_map();
  for (int n = 0; n <= 10; ++n) {
    CHECK(projectively_equal(raw_matrix(iterate), mat_pow_int(raw_matrix(phi), n), 1e-8));
    iterate = compose(phi, iterate);
  }
}

TEST_CASE("inverse of the identity is the identity") {
  CHECK(is_identity(inverse(identity_map())));
}

TEST_CASE("inverse of the Cayley map matches its closed form") {
  const LinearFractionalMap psi_inv = inverse(reference::cayley_map());
  // Psi^{-1}(z) = ((z1-1)/(z1+1), 2 z2/(z1+1))
  const LinearFractionalMap expected{Mat2{1.0, 0.0, 0.0, 2.0}, Vec2{-1.0, 0.0}, Vec2{1.0, 0.0},
                                     Complex(1.0)};
  CHECK(projectively_equal(raw_matrix(psi_inv), raw_matrix(expected), 1e-12));
}

TEST_CASE("inverse round trips pointwise") {
  UniformRng rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const LinearFractionalMap phi = random_map(rng);
    const LinearFractionalMap inv = inverse(phi);
    for (int i = 0; i < 10; ++i) {
      const Vec2 z = sample_ball(rng);
      try {
        CHECK((eval(inv, eval(phi, z)) - z).norm() < 1e-9 * (1.0 + z.norm()));
      } catch (const Error&) {
        continue;
      }
    }
  }
}

TEST_CASE("fixed points of the worked map") {
  const auto fps = fixed_points(reference::triple_block_map());
  REQUIRE(fps.size() == 1);
  CHECK(!fps[0].at_infinity);
  CHECK((fps[0].location - Vec2{1.0, 0.0}).norm() < 1e-9);
  CHECK(fps[0].cls == PointClass::Boundary);
  CHECK(fps[0].block_size == 3);
  CHECK(std::abs(fps[0].eigenvalue - 2.0) < 1e-9);
}

TEST_CASE("identity map has degenerate fixed points") {
  CHECK_THROWS_AS((void)fixed_points(identity_map()), Error);
  try {
    (void)fixed_points(identity_map());
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateAllFixed);
  }
}

TEST_CASE("diagonal contraction fixes the origin and two directions at infinity") {
  const LinearFractionalMap phi{Mat2{0.5, 0.0, 0.0, Complex(1.0 / 3.0)}, Vec2{0.0, 0.0},
                                Vec2{0.0, 0.0}, Complex(1.0)};
  const auto fps = fixed_points(phi);
  REQUIRE(fps.size() == 3);
  int finite = 0, infinite = 0;
  for (const auto& fp : fps) {
    if (fp.at_infinity) {
      ++infinite;
    } else {
      ++finite;
      CHECK(fp.location.norm() < 1e-12);
      CHECK(fp.cls == PointClass::Interior);
    }
  }
  CHECK(finite == 1);
  CHECK(infinite == 2);
}

TEST_CASE("finite fixed points satisfy the fixed-point equation") {
  UniformRng rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    const LinearFractionalMap phi = random_map(rng);
    if (is_identity(phi)) continue;
    std::vector<FixedPoint> fps;
    try {
      fps = fixed_points(phi);
    } catch (const Error&) {
      continue;  // near-defective random matrix
    }
    for (const auto& fp : fps) {
      if (fp.at_infinity) continue;
      try {
        CHECK((eval(phi, fp.location) - fp.location).norm() < 1e-8 * (1.0 + fp.location.norm()));
      } catch (const Error&) {
      }
    }
  }
}

TEST_CASE("self-map check accepts the worked map") {
  const SelfMapReport r = self_map_check(reference::triple_block_map(), 10000, 42);
  CHECK(r.violations == 0);
  CHECK(r.worst_margin <= 1.0);
}

TEST_CASE("self-map check accepts the identity") {
  const SelfMapReport r = self_map_check(identity_map(), 2000, 42);
  CHECK(r.violations == 0);
  CHECK(r.worst_margin < 1.0);
}

TEST_CASE("self-map check flags a dilation") {
  const LinearFractionalMap dilation{Mat2{2.0, 0.0, 0.0, 0.0}, Vec2{0.0, 0.0}, Vec2{0.0, 0.0},
                                     Complex(1.0)};
  const SelfMapReport r = self_map_check(dilation, 2000, 42);
  CHECK(r.violations > 0);
  CHECK(r.worst_margin > 1.0);
}

TEST_CASE("self-map check is deterministic in the seed") {
  const LinearFractionalMap phi = reference::triple_block_map();
  const SelfMapReport a = self_map_check(phi, 500, 123);
  const SelfMapReport b = self_map_check(phi, 500, 123);
  CHECK(a.violations == b.violations);
  CHECK(a.worst_margin == b.worst_margin);
}
