#pragma once

#include <cmath>

#include "casimir/errors.hpp"
#include "casimir/units.hpp"

namespace casimir {

enum class SlabArrangement {
    SlabInterior,       // slab strictly between the mirrors
    SlabOnLowerMirror,  // slab resting on the lower mirror, vacuum gap above
};

// Planar cavity: mirror separation a, medium thickness b.
struct CavityGeometry {
    double a = 0.0;
    double b = 0.0;
    SlabArrangement arrangement = SlabArrangement::SlabInterior;

    static CavityGeometry slab_interior(double a, double b) {
        check(a, b);
        return {a, b, SlabArrangement::SlabInterior};
    }

    static CavityGeometry slab_on_lower_mirror(double a, double b) {
        check(a, b);
        if (b >= a) throw DomainError("geometry: a vacuum gap requires b < a");
        return {a, b, SlabArrangement::SlabOnLowerMirror};
    }

private:
    static void check(double a, double b) {
        if (!(std::isfinite(a) && a > 0.0)) throw DomainError("geometry: a must be finite and > 0");
        if (!(std::isfinite(b) && b >= 0.0)) throw DomainError("geometry: b must be finite and >= 0");
        if (b > a) throw DomainError("geometry: slab thickness b must not exceed cavity size a");
    }
};

// Force per unit area. Sign convention used throughout the library:
// positive means repulsive (mirrors pushed apart), negative attractive.
struct ForceResult {
    double force_per_area = 0.0;
    double effective_distance = 0.0;  // a' where meaningful, NaN otherwise
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = true;
    UnitsContext units;
};

}  // namespace casimir
