#pragma once

#include <vector>

#include "casimir/dispersion.hpp"
#include "casimir/geometry.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/sweep.hpp"
#include "casimir/units.hpp"

namespace casimir {

// Three-layer arrangement: mirror | magnetic slab of thickness b |
// vacuum gap a - b | mirror. The slab response must be purely magnetic
// (eps == 1), i.e. a MagneticDrude or Vacuum model.
struct LayerStack {
    double a = 0.0;
    double b = 0.0;
    DispersionModel model;

    static LayerStack on_lower_mirror(double a, double b, const DispersionModel& model);
};

// Stress integrand u * w * rho(u, xi) of the three-layer cavity, with
//
//   rho = [ s w (eps + mu + (K^2 + L^2)(eps - mu))
//           + 2 e^{-2(a-b)w} (L w eps - K s)(K w mu - L s) ]
//         / [ 8 (K N s + L M w eps)(L M s + K N w mu) ],
//
//   K = sinh(b s), L = cosh(b s), M = sinh((a-b)w), N = cosh((a-b)w),
//   w^2 = u^2 + xi^2/c^2, s^2 = u^2 + eps mu xi^2/c^2.
//
// The hyperbolic functions are factored into decaying exponentials, so
// the value stays finite for arbitrarily large b s and (a-b) w where the
// naive sinh/cosh products would overflow. With mu == 1 this reduces
// exactly to the plain-cavity factor u w / (e^{2 a w} - 1).
double magnetic_integrand(double u, double xi, const LayerStack& stack, double c = 1.0);

// Vacuum stress at the upper mirror, double-integrated over (u, xi).
// The overall sign is calibrated once against the Omega = 0 limit, which
// must reproduce the attractive plain-cavity force -hbar c pi^2/(240 a^4);
// the force then vanishes as the gap a - b grows.
ForceResult magnetic_force(const LayerStack& stack, const QuadratureSpec& spec,
                           const UnitsContext& units);

// Sweep over cavity sizes a at fixed slab: per row the gap a - b, the
// force, and the force rescaled by (a-b)^4 / (hbar c pi^2 / 240).
// Natural units. Rows are computed independently (in parallel when
// available) with deterministic ordering; non-converged rows are
// flagged, never dropped.
SweepProfile rescaled_force_curve(const LayerStack& stack_template,
                                  const std::vector<double>& a_values,
                                  const QuadratureSpec& spec);

}  // namespace casimir
