#pragma once

namespace casimir {

namespace constants {

// CODATA 2018. SI constants live here and nowhere else.
inline constexpr double hbar_si = 1.054571817e-34;  // J s
inline constexpr double c_si = 299792458.0;         // m / s (exact)

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double zeta2 = pi * pi / 6.0;
inline constexpr double zeta3 = 1.2020569031595942854;
inline constexpr double zeta4 = pi * pi * pi * pi / 90.0;

}  // namespace constants

enum class UnitsMode { Natural, SI };

// Unit system attached to force results. Natural units set hbar = c = 1
// (the default everywhere); SI carries the CODATA values.
struct UnitsContext {
    UnitsMode mode = UnitsMode::Natural;
    double hbar = 1.0;
    double c = 1.0;

    static UnitsContext natural() { return {UnitsMode::Natural, 1.0, 1.0}; }
    static UnitsContext si() { return {UnitsMode::SI, constants::hbar_si, constants::c_si}; }

    double hbar_c() const { return hbar * c; }
};

}  // namespace casimir
