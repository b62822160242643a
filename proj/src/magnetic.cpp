#include "casimir/magnetic.hpp"

#include <cmath>
#include <limits>

#include "casimir/errors.hpp"

namespace casimir {

namespace {
constexpr double kPiSq = constants::pi * constants::pi;
}

LayerStack LayerStack::on_lower_mirror(double a, double b, const DispersionModel& model) {
    if (!(std::isfinite(a) && std::isfinite(b) && b > 0.0 && b < a))
        throw DomainError("layer stack: requires 0 < b < a (vacuum gap above the slab)");
    if (model.kind != MaterialKind::MagneticDrude && model.kind != MaterialKind::Vacuum)
        throw DomainError("layer stack: slab response must be purely magnetic (eps == 1)");
    return {a, b, model};
}

double magnetic_integrand(double u, double xi, const LayerStack& stack, double c) {
    if (!(std::isfinite(u) && u >= 0.0) || !(std::isfinite(xi) && xi >= 0.0))
        throw DomainError("magnetic_integrand: u and xi must be finite and >= 0");
    if (!(std::isfinite(c) && c > 0.0))
        throw DomainError("magnetic_integrand: c must be > 0");
    if (u == 0.0 && xi == 0.0) return 0.0;  // bounded limit point

    const double eps = 1.0;  // slab is purely magnetic by construction
    const double mu = mu_at_imag(stack.model, xi);
    const double k = xi / c;
    const double w = std::hypot(u, k);
    const double s = std::hypot(u, std::sqrt(mu) * k);
    const double gap = stack.a - stack.b;

    // Factor e^{b s} out of K, L and e^{(a-b) w} out of M, N. The common
    // growth cancels between numerator and denominator, leaving only the
    // decaying exponentials below; naive sinh/cosh products overflow
    // once b s + (a-b) w exceeds ~710.
    const double eb = std::exp(-2.0 * stack.b * s);
    const double eg = std::exp(-2.0 * gap * w);
    const double kh = 0.5 * (1.0 - eb);  // sinh(b s) e^{-b s}
    const double lh = 0.5 * (1.0 + eb);  // cosh(b s) e^{-b s}
    const double mh = 0.5 * (1.0 - eg);
    const double nh = 0.5 * (1.0 + eg);

    const double num = s * w * (eps + mu) * eb + s * w * (kh * kh + lh * lh) * (eps - mu) +
                       2.0 * eg * (lh * w * eps - kh * s) * (kh * w * mu - lh * s);
    const double den = 8.0 * (kh * nh * s + lh * mh * w * eps) * (lh * mh * s + kh * nh * w * mu);
    if (den == 0.0)
        throw DegenerateModeError("magnetic_integrand: layered stress denominator vanished");
    return u * w * eg * num / den;
}

ForceResult magnetic_force(const LayerStack& stack, const QuadratureSpec& spec,
                           const UnitsContext& units) {
    QuadratureSpec local = spec;
    local.validate();
    const double gap = stack.a - stack.b;
    local.decay_scale = 1.0 / (2.0 * gap);
    const double c = units.c;
    // A slab resonance far below the gap scale confines the permeability
    // structure to small xi; keep nodes there too.
    const double resonance_scale = stack.model.omega0 / c;
    if (stack.model.Omega > 0.0 && resonance_scale > 0.0 && resonance_scale < local.decay_scale)
        local.decay_scale = resonance_scale;

    // Integrate over (u, xi/c) so both axes carry the same decay scale.
    auto integrand = [&stack, c](double u, double kappa) {
        return magnetic_integrand(u, kappa * c, stack, c);
    };

    const QuadratureResult q = integrate_double_semi_infinite(integrand, local);
    const double prefactor = units.hbar_c() / kPiSq;

    ForceResult result;
    // Sign calibrated once against the mu == 1 limit, where the stress
    // integral is positive but the plain-cavity force is attractive.
    result.force_per_area = -prefactor * q.value;
    result.effective_distance = gap;
    result.error_estimate = prefactor * q.error_estimate;
    result.evaluations = q.evaluations;
    result.converged = q.converged;
    result.units = units;
    return result;
}

SweepProfile rescaled_force_curve(const LayerStack& stack_template,
                                  const std::vector<double>& a_values,
                                  const QuadratureSpec& spec) {
    for (double a : a_values)
        if (!(std::isfinite(a) && a > stack_template.b))
            throw DomainError("rescaled_force_curve: every a must exceed the slab thickness b");
    spec.validate();

    const UnitsContext units = UnitsContext::natural();
    const double casimir_factor = kPiSq / 240.0;

    SweepProfile profile;
    profile.parameter_name = "a";
    profile.columns = {"a", "gap", "force", "rescaled", "error_estimate"};
    profile.rows.assign(a_values.size(), {});
    profile.row_converged.assign(a_values.size(), false);

    for_each_index(a_values.size(), ExecMode::Parallel, [&](std::size_t i) {
        try {
            const LayerStack stack =
                LayerStack::on_lower_mirror(a_values[i], stack_template.b, stack_template.model);
            const ForceResult fr = magnetic_force(stack, spec, units);
            const double gap = a_values[i] - stack_template.b;
            const double gap4 = gap * gap * gap * gap;
            profile.rows[i] = {a_values[i], gap, fr.force_per_area,
                               fr.force_per_area * gap4 / casimir_factor, fr.error_estimate};
            profile.row_converged[i] = fr.converged;
        } catch (const Error&) {
            // failed rows are flagged, never dropped
            const double nan = std::numeric_limits<double>::quiet_NaN();
            profile.rows[i] = {a_values[i], a_values[i] - stack_template.b, nan, nan, nan};
            profile.row_converged[i] = false;
        }
    });

    profile.metadata = {
        {"sweep", "magnetic rescaled force curve"},
        {"b", format_full(stack_template.b)},
        {"Omega", format_full(stack_template.model.Omega)},
        {"omega0", format_full(stack_template.model.omega0)},
        {"rel_tol", format_full(spec.rel_tol)},
        {"units", "natural"},
    };
    return profile;
}

}  // namespace casimir
