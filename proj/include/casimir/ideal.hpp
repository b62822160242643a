#pragma once

#include "casimir/dispersion.hpp"
#include "casimir/geometry.hpp"
#include "casimir/units.hpp"

namespace casimir {

// Fold map of a slab of thickness b: identity below the slab, reflection
// inside it, shift by 2b above. Continuous, piecewise linear with slopes
// {+1, -1, +1}; the interval [-b, 0] and the interval [b, 2b] have the
// same image, which is the imaging property of the slab.
double map_coordinate(double x, double b);

// Effective mirror separation |a - 2b| of the folded cavity
// (SlabInterior only).
double effective_distance(const CavityGeometry& geometry);

// Frequency-dependent effective separation a - b + b / eps(i xi).
// Signed: negative values mark the repulsive regime. Throws
// DivergentDistanceError where eps(i xi) == 0; force integrands treat
// that point as zero since the kernel vanishes as |a'| -> inf.
double dispersive_effective_distance(const CavityGeometry& geometry,
                                     const DispersionModel& model, double xi);

// Closed-form cavity force magnitude hbar c pi^2 / (240 a'^4), returned
// positive (repulsive) per the folded configuration a < 2b. The empty
// cavity orientation (attraction, negative sign) is produced by the
// dispersive route, where sign(force) = -sign(a'^3). a' == 0 is an
// error, not an infinity.
ForceResult ideal_casimir_force(double a_prime, const UnitsContext& units);

// Weight per area rho * g * t of a floating mirror foil.
double weight_per_area(double thickness, double density, double gravity);

// Separation a' at which the closed-form force balances the foil weight:
// a' = (hbar c pi^2 / (240 rho g t))^{1/4}.
double levitation_balance(double thickness, double density, double gravity,
                          const UnitsContext& units);

}  // namespace casimir
