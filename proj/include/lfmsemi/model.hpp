#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "lfmsemi/domains.hpp"
#include "lfmsemi/jordan.hpp"
#include "lfmsemi/lfm.hpp"

namespace lfmsemi {

enum class Location { Interior, Boundary };

// Classification of a ball self-map by its Denjoy-Wolff data, together with
// the intertwining pair: sigma . phi = Phi . sigma with sigma = S^{-1} as a
// linear fractional map and Phi carrying the Jordan matrix.
struct ModelClass {
  FixedPoint dw;
  Location location = Location::Boundary;
  int multiplicity = 1;  // Jordan block size at the Denjoy-Wolff eigenvalue
  DomainKind domain = DomainKind::SiegelHalfSpace;
  LinearFractionalMap sigma_map;
  LinearFractionalMap model_map;
  JordanDecomposition decomp;
  std::vector<std::pair<Complex, int>> eigenvalues;
  Complex dw_eigenvalue{};
  Complex standardized_lambda{};  // 1/alpha at the Denjoy-Wolff eigenvalue
};

ModelClass classify(const LinearFractionalMap& phi);

// Heisenberg translation h_b(z) = Az + b with A = [[1, 2 conj(b2)], [0, 1]];
// a self-map of the Siegel half space exactly when Re b1 >= |b2|^2.
struct HeisenbergTranslation {
  Vec2 b;
  LinearFractionalMap map() const;
};

LinearFractionalMap heisenberg(const Vec2& b);

// Picks the Denjoy-Wolff point among boundary fixed points by proximity to
// the orbit limit. Throws NoConvergence when nothing is close and
// AmbiguousDenjoyWolff when two candidates are indistinguishable.
FixedPoint select_dw_boundary(const Vec2& orbit_limit, const std::vector<FixedPoint>& fps);

// An analytic (not linear fractional) self-map given by transport through a
// model flow: phi_t = backward . flow(t) . forward.
struct AnalyticModelMap {
  std::function<Vec2(const Vec2&)> forward;              // into the model domain
  std::function<Vec2(const Vec2&)> backward;             // back from the model domain
  std::function<Vec2(double, const Vec2&)> model_flow;   // Phi_t on the model domain

  Vec2 at(double t, const Vec2& z) const { return backward(model_flow(t, forward(z))); }
};

// The worked non-rational example: sigma from `domains`, flow the Heisenberg
// translation with b_t = (t(t+7)/16, t/4).
AnalyticModelMap square_root_heisenberg_model();

Vec2 analytic_phi(const Vec2& z);
Vec2 analytic_phi_t(double t, const Vec2& z);

// Same map through the expanded rational-radical expressions. The radicals
// are evaluated as the products of principal square roots the transport
// produces; see the radical helpers in the implementation.
Vec2 analytic_phi_t_closed_form(double t, const Vec2& z);

}  // namespace lfmsemi
