#include "casimir/dispersion.hpp"

#include <cmath>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

void check_xi(double xi, const char* who) {
    if (!std::isfinite(xi) || xi < 0.0)
        throw DomainError(std::string(who) + ": xi must be finite and >= 0");
}

}  // namespace

DispersionModel DispersionModel::vacuum() { return {}; }

DispersionModel DispersionModel::constant_lens(double eps_value) {
    if (!std::isfinite(eps_value) || eps_value == 0.0)
        throw DomainError("constant_lens: eps_value must be finite and nonzero");
    DispersionModel m;
    m.kind = MaterialKind::ConstantLens;
    m.eps_value = eps_value;
    return m;
}

DispersionModel DispersionModel::drude_gain(double omega0, double gamma) {
    if (!(std::isfinite(omega0) && omega0 > 0.0))
        throw DomainError("drude_gain: omega0 must be finite and > 0");
    if (!(std::isfinite(gamma) && gamma >= 0.0))
        throw DomainError("drude_gain: gamma must be finite and >= 0");
    DispersionModel m;
    m.kind = MaterialKind::DrudeGain;
    m.omega0 = omega0;
    m.gamma = gamma;
    return m;
}

DispersionModel DispersionModel::magnetic_drude(double Omega, double omega0) {
    if (!(std::isfinite(Omega) && Omega >= 0.0))
        throw DomainError("magnetic_drude: Omega must be finite and >= 0");
    if (!(std::isfinite(omega0) && omega0 > 0.0))
        throw DomainError("magnetic_drude: omega0 must be finite and > 0");
    DispersionModel m;
    m.kind = MaterialKind::MagneticDrude;
    m.Omega = Omega;
    m.omega0 = omega0;
    return m;
}

double eps_at_imag(const DispersionModel& model, double xi) {
    check_xi(xi, "eps_at_imag");
    switch (model.kind) {
        case MaterialKind::Vacuum:
            return 1.0;
        case MaterialKind::ConstantLens:
            return model.eps_value;
        case MaterialKind::DrudeGain: {
            // 1 - 2 w0^2 / (w0^2 + xi^2 + gamma xi); real, in [-1, 1).
            const double w0sq = model.omega0 * model.omega0;
            return 1.0 - 2.0 * w0sq / (w0sq + xi * xi + model.gamma * xi);
        }
        case MaterialKind::MagneticDrude:
            return 1.0;
    }
    throw DomainError("eps_at_imag: unknown model kind");
}

double mu_at_imag(const DispersionModel& model, double xi) {
    check_xi(xi, "mu_at_imag");
    switch (model.kind) {
        case MaterialKind::Vacuum:
            return 1.0;
        case MaterialKind::ConstantLens:
            return model.eps_value;
        case MaterialKind::DrudeGain:
            return eps_at_imag(model, xi);  // impedance matched
        case MaterialKind::MagneticDrude: {
            const double w0sq = model.omega0 * model.omega0;
            return 1.0 + model.Omega * model.Omega / (w0sq + xi * xi);
        }
    }
    throw DomainError("mu_at_imag: unknown model kind");
}

std::complex<double> eps_at_real(const DispersionModel& model, double omega) {
    if (!std::isfinite(omega)) throw DomainError("eps_at_real: omega must be finite");
    switch (model.kind) {
        case MaterialKind::Vacuum:
            return 1.0;
        case MaterialKind::ConstantLens:
            return model.eps_value;
        case MaterialKind::DrudeGain: {
            const double w0sq = model.omega0 * model.omega0;
            const std::complex<double> den(w0sq - omega * omega, -model.gamma * omega);
            if (den == 0.0)
                throw SingularityError("eps_at_real: pole at omega = omega0 with gamma = 0");
            return 1.0 - 2.0 * w0sq / den;
        }
        case MaterialKind::MagneticDrude:
            return 1.0;
    }
    throw DomainError("eps_at_real: unknown model kind");
}

std::complex<double> mu_at_real(const DispersionModel& model, double omega) {
    if (!std::isfinite(omega)) throw DomainError("mu_at_real: omega must be finite");
    switch (model.kind) {
        case MaterialKind::Vacuum:
            return 1.0;
        case MaterialKind::ConstantLens:
            return model.eps_value;
        case MaterialKind::DrudeGain:
            return eps_at_real(model, omega);
        case MaterialKind::MagneticDrude: {
            const double den = model.omega0 * model.omega0 - omega * omega;
            if (den == 0.0)
                throw SingularityError("mu_at_real: pole at omega = omega0");
            return 1.0 + model.Omega * model.Omega / den;
        }
    }
    throw DomainError("mu_at_real: unknown model kind");
}

}  // namespace casimir
