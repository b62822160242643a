#include "casimir/ideal.hpp"

#include <cmath>

#include "casimir/errors.hpp"

namespace casimir {

double map_coordinate(double x, double b) {
    if (!(std::isfinite(b) && b > 0.0)) throw DomainError("map_coordinate: b must be > 0");
    if (!std::isfinite(x)) throw DomainError("map_coordinate: x must be finite");
    if (x < 0.0) return x;
    if (x <= b) return -x;
    return x - 2.0 * b;
}

double effective_distance(const CavityGeometry& geometry) {
    if (geometry.arrangement != SlabArrangement::SlabInterior)
        throw DomainError("effective_distance: requires the slab-interior arrangement");
    return std::abs(geometry.a - 2.0 * geometry.b);
}

double dispersive_effective_distance(const CavityGeometry& geometry,
                                     const DispersionModel& model, double xi) {
    if (geometry.arrangement != SlabArrangement::SlabInterior)
        throw DomainError("dispersive_effective_distance: requires the slab-interior arrangement");
    const double eps = eps_at_imag(model, xi);
    if (eps == 0.0)
        throw DivergentDistanceError("dispersive_effective_distance: eps(i xi) = 0");
    return geometry.a - geometry.b + geometry.b / eps;
}

ForceResult ideal_casimir_force(double a_prime, const UnitsContext& units) {
    if (!std::isfinite(a_prime)) throw DomainError("ideal_casimir_force: a' must be finite");
    if (a_prime == 0.0)
        throw DivergentForceError("ideal_casimir_force: a' = 0 (no medium sustains the lens response at all wavelengths)");
    const double ap2 = a_prime * a_prime;
    ForceResult result;
    result.force_per_area = units.hbar_c() * constants::pi * constants::pi / (240.0 * ap2 * ap2);
    result.effective_distance = std::abs(a_prime);
    result.error_estimate = 0.0;
    result.evaluations = 0;
    result.converged = true;
    result.units = units;
    return result;
}

double weight_per_area(double thickness, double density, double gravity) {
    if (!(std::isfinite(thickness) && thickness > 0.0))
        throw DomainError("weight_per_area: thickness must be > 0");
    if (!(std::isfinite(density) && density > 0.0))
        throw DomainError("weight_per_area: density must be > 0");
    if (!(std::isfinite(gravity) && gravity > 0.0))
        throw DomainError("weight_per_area: gravity must be > 0");
    return density * gravity * thickness;
}

double levitation_balance(double thickness, double density, double gravity,
                          const UnitsContext& units) {
    const double weight = weight_per_area(thickness, density, gravity);
    const double pi2 = constants::pi * constants::pi;
    return std::pow(units.hbar_c() * pi2 / (240.0 * weight), 0.25);
}

}  // namespace casimir
