#pragma once

#include "casimir/dispersion.hpp"
#include "casimir/geometry.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/units.hpp"

namespace casimir {

// Regularized cavity mode-sum term. For a' > 0 this is the plain factor
// w u / (e^{2 a' w} - 1). For a' < 0 that expression diverges, but it
// equals -w u / (e^{2|a'| w} - 1) - w u, and the -w u piece does not
// depend on the cavity; this function returns the convergent remainder.
double regularized_kernel_term(double a_prime, double w, double u);

// Plain-cavity vacuum stress at separation a' > 0, evaluated as the
// full double integral over transverse wavenumber and imaginary
// frequency. Positive; equals hbar c pi^2 / (240 a'^4).
ForceResult lifshitz_stress(double a_prime, const QuadratureSpec& spec,
                            const UnitsContext& units);

// Dispersive cavity force: a single imaginary-frequency integral of the
// kernel h at the frequency-dependent effective distance,
//
//   f = -(hbar / pi^2) Int_0^inf h(q) / a'(xi)^3 dxi,  q = |a'| xi / c.
//
// Positive (repulsive) where a'(xi) < 0 dominates, negative for an
// ordinary gap. Frequencies where eps(i xi) = 0 contribute zero.
ForceResult casimir_force_dispersive(const CavityGeometry& geometry,
                                     const DispersionModel& model,
                                     const QuadratureSpec& spec,
                                     const UnitsContext& units);

// Ratio of the dispersive force to the closed-form value at |a - 2b|,
// oriented so that perfect agreement gives +1. Dimensionless; the units
// context fixes c in the kernel argument (natural by default).
double ratio_eta(const CavityGeometry& geometry, const DispersionModel& model,
                 const QuadratureSpec& spec,
                 const UnitsContext& units = UnitsContext::natural());

}  // namespace casimir
