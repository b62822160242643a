#pragma once

#include <functional>

namespace casimir {

// Tolerances and transform scale for the semi-infinite integrators.
//
// decay_scale is the characteristic length of the integrand's decay.
// The integrators map (0, inf) onto the unit interval through
// x = decay_scale * t / (1 - t), which places half of the nodes below
// that scale; force routines set it per call from the physical length.
struct QuadratureSpec {
    double rel_tol = 1e-8;
    double abs_tol = 1e-14;
    int max_subdivisions = 2000;
    double decay_scale = 1.0;

    void validate() const;  // throws DomainError on invalid settings
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod integration of f over (0, inf).
//
// The integrand is evaluated on the open interval only (never at 0 and
// never at the transformed endpoint), so expressions whose limits exist
// but whose naive values are 0/0 at the boundary are safe. A non-finite
// integrand value raises IntegrandError carrying the offending
// abscissa. The converged flag is honest: it stays false whenever the
// subdivision budget ran out before the tolerance was met, and
// converged implies error_estimate <= max(rel_tol * |value|, abs_tol).
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         const QuadratureSpec& spec);

// Iterated double integral of f(u, xi) over (0, inf) x (0, inf), inner
// over u, outer over xi. Iterated rather than tensor-product so the
// inner transform can adapt where the effective decay depends on xi.
// Inner integrals run at a fraction of the requested tolerance and
// their error is folded into the reported estimate.
QuadratureResult integrate_double_semi_infinite(
    const std::function<double(double, double)>& f, const QuadratureSpec& spec);

}  // namespace casimir
