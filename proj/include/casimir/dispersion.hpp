#pragma once

#include <complex>

namespace casimir {

enum class MaterialKind { Vacuum, ConstantLens, DrudeGain, MagneticDrude };

// Closed family of material responses. Models are built through the
// factories below, which validate parameters; arbitrary user-supplied
// response functions are deliberately not supported, so realness of
// eps(i xi) and mu(i xi) holds by construction for every instance.
struct DispersionModel {
    MaterialKind kind = MaterialKind::Vacuum;
    double eps_value = 1.0;  // ConstantLens: frequency-independent eps = mu
    double omega0 = 0.0;     // resonance frequency
    double gamma = 0.0;      // DrudeGain linewidth
    double Omega = 0.0;      // MagneticDrude coupling strength

    static DispersionModel vacuum();

    // Frequency-independent eps = mu. eps_value = -1 is the ideal lens
    // medium; it is a declared idealization, not a causal response.
    static DispersionModel constant_lens(double eps_value);

    // Single inverted spectral line. On the imaginary axis the formula is
    // continuous in gamma at 0, so gamma defaults to exactly 0 there; a
    // positive gamma is only needed for pole-free real-axis plots.
    static DispersionModel drude_gain(double omega0, double gamma = 0.0);

    // Purely magnetic response with eps == 1. Omega = 0 degenerates to
    // vacuum and is allowed so the plain-cavity limit stays reachable.
    static DispersionModel magnetic_drude(double Omega, double omega0);
};

// Permittivity eps(i xi) on the positive imaginary frequency axis.
// Real for every model and every xi >= 0.
double eps_at_imag(const DispersionModel& model, double xi);

// Permeability mu(i xi). The DrudeGain lens medium is impedance
// matched, so mu equals eps there.
double mu_at_imag(const DispersionModel& model, double xi);

// Complex permittivity on the real frequency axis. With gamma == 0 the
// DrudeGain response has a pole at +-omega0; evaluating exactly there
// throws SingularityError. Negative omega is accepted so the crossing
// symmetry eps(-omega) = conj(eps(omega)) can be checked directly.
std::complex<double> eps_at_real(const DispersionModel& model, double omega);

std::complex<double> mu_at_real(const DispersionModel& model, double omega);

}  // namespace casimir
