#include "casimir/lifshitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "casimir/errors.hpp"
#include "casimir/ideal.hpp"
#include "casimir/polylog.hpp"

namespace casimir {

namespace {

constexpr double kPiSq = constants::pi * constants::pi;

// Signed effective distance, or +inf where eps(i xi) = 0 so callers can
// treat the point as a vanishing contribution.
double effective_distance_at(const CavityGeometry& geometry, const DispersionModel& model,
                             double xi) {
    const double eps = eps_at_imag(model, xi);
    if (eps == 0.0) return std::numeric_limits<double>::infinity();
    return geometry.a - geometry.b + geometry.b / eps;
}

}  // namespace

double regularized_kernel_term(double a_prime, double w, double u) {
    if (!(std::isfinite(a_prime) && a_prime != 0.0))
        throw DomainError("regularized_kernel_term: a' must be finite and nonzero");
    if (!(std::isfinite(w) && w > 0.0))
        throw DomainError("regularized_kernel_term: w must be > 0");
    if (!(std::isfinite(u) && u >= 0.0))
        throw DomainError("regularized_kernel_term: u must be >= 0");
    const double value = w * u / std::expm1(2.0 * std::abs(a_prime) * w);
    return a_prime > 0.0 ? value : -value;
}

ForceResult lifshitz_stress(double a_prime, const QuadratureSpec& spec,
                            const UnitsContext& units) {
    if (!(std::isfinite(a_prime) && a_prime > 0.0))
        throw DomainError("lifshitz_stress: a' must be finite and > 0");
    QuadratureSpec local = spec;
    local.validate();
    local.decay_scale = 1.0 / (2.0 * a_prime);

    // Outer variable is xi/c, so both axes share the 1/(2a') decay and
    // the prefactor picks up the factor c.
    const double two_a = 2.0 * a_prime;
    auto integrand = [two_a](double u, double kappa) {
        const double w = std::hypot(u, kappa);
        return u * w / std::expm1(two_a * w);
    };

    const QuadratureResult q = integrate_double_semi_infinite(integrand, local);
    const double prefactor = units.hbar_c() / kPiSq;

    ForceResult result;
    result.force_per_area = prefactor * q.value;
    result.effective_distance = a_prime;
    result.error_estimate = prefactor * q.error_estimate;
    result.evaluations = q.evaluations;
    result.converged = q.converged;
    result.units = units;
    return result;
}

ForceResult casimir_force_dispersive(const CavityGeometry& geometry,
                                     const DispersionModel& model,
                                     const QuadratureSpec& spec,
                                     const UnitsContext& units) {
    if (geometry.arrangement != SlabArrangement::SlabInterior)
        throw DomainError("casimir_force_dispersive: requires the slab-interior arrangement");
    QuadratureSpec local = spec;
    local.validate();
    const double c = units.c;

    // Coarse scan for the narrowest kernel width: the integrand decays in
    // xi on the scale c / (2 min |a'(xi)|), and node placement has to
    // resolve that narrowest scale.
    const double length_scale =
        std::max({std::abs(geometry.a - 2.0 * geometry.b), geometry.a - geometry.b,
                  0.01 * geometry.a});
    double min_distance = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 32; ++j) {
        const double xi = (c / length_scale) * std::pow(10.0, -3.0 + 6.0 * j / 31.0);
        const double ap = std::abs(effective_distance_at(geometry, model, xi));
        if (std::isfinite(ap) && ap > 0.0) min_distance = std::min(min_distance, ap);
    }
    if (!std::isfinite(min_distance) || min_distance <= 0.0) min_distance = length_scale;
    local.decay_scale = c / (2.0 * min_distance);
    // A gain resonance far below the kernel scale confines the dispersion
    // of a'(xi) to a sliver near xi = omega0 that the nodes must still
    // resolve; shrink the transform scale to the sliver in that case.
    if (model.kind == MaterialKind::DrudeGain && model.omega0 < local.decay_scale)
        local.decay_scale = model.omega0;

    auto integrand = [&geometry, &model, c](double xi) {
        const double ap = effective_distance_at(geometry, model, xi);
        if (!std::isfinite(ap)) return 0.0;  // |a'| -> inf, kernel decays faster
        const double q = std::abs(ap) * xi / c;
        if (!std::isfinite(q)) return 0.0;
        return kernel_h(q) / (ap * ap * ap);
    };

    const QuadratureResult q = integrate_semi_infinite(integrand, local);
    const double prefactor = units.hbar / kPiSq;

    ForceResult result;
    result.force_per_area = -prefactor * q.value;
    result.effective_distance = effective_distance_at(geometry, model, 0.0);
    result.error_estimate = prefactor * q.error_estimate;
    result.evaluations = q.evaluations;
    result.converged = q.converged;
    result.units = units;
    return result;
}

double ratio_eta(const CavityGeometry& geometry, const DispersionModel& model,
                 const QuadratureSpec& spec, const UnitsContext& units) {
    const double distance = geometry.a - 2.0 * geometry.b;
    if (distance == 0.0)
        throw DomainError("ratio_eta: a = 2b gives a vanishing reference distance");
    const double force =
        casimir_force_dispersive(geometry, model, spec, units).force_per_area;
    const double magnitude = ideal_casimir_force(std::abs(distance), units).force_per_area;
    // The closed form is repulsive for a < 2b and attractive otherwise.
    const double reference = distance < 0.0 ? magnitude : -magnitude;
    return force / reference;
}

}  // namespace casimir
