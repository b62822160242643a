#include "casimir/polylog.hpp"

#include <cmath>

#include "casimir/errors.hpp"
#include "casimir/units.hpp"

namespace casimir {

namespace {

// Defining series; geometric convergence, used for z <= 0.5.
double polylog_series(int n, double z) {
    double zk = z;
    double sum = z;
    for (int k = 2; k < 128; ++k) {
        zk *= z;
        const double kk = static_cast<double>(k);
        const double term = (n == 2) ? zk / (kk * kk) : zk / (kk * kk * kk);
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return sum;
}

// Euler reflection: Li_2(z) = pi^2/6 - ln(z) ln(1-z) - Li_2(1-z).
// For z in (0.5, 1) the reflected argument is small enough for the
// direct series.
double dilog_near_one(double z) {
    const double d = 1.0 - z;  // in (0, 0.5)
    return constants::zeta2 - std::log1p(-d) * std::log(d) - polylog_series(2, d);
}

// Expansion of Li_3(e^w) about w = ln z for |w| < ln 2:
//   Li_3(e^w) = zeta(3) + zeta(2) w + w^2/2 (3/2 - ln(-w))
//               + sum_{k>=3} zeta(3-k) w^k / k!
// The tail coefficients are zeta(3-k)/k!; zeta at negative even
// integers vanishes.
double trilog_near_one(double z) {
    static constexpr double kTail[] = {
        -1.0 / 12.0,                  // k = 3:  zeta(0)/3!
        -1.0 / 288.0,                 // k = 4:  zeta(-1)/4!
        0.0,                          // k = 5
        1.0 / 86400.0,                // k = 6:  zeta(-3)/6!
        0.0,                          // k = 7
        -1.0 / 10160640.0,            // k = 8:  zeta(-5)/8!
        0.0,                          // k = 9
        1.0 / 870912000.0,            // k = 10: zeta(-7)/10!
        0.0,                          // k = 11
        -1.0 / 63228211200.0,         // k = 12: zeta(-9)/12!
        0.0,                          // k = 13
        691.0 / 2856481113216000.0,   // k = 14: zeta(-11)/14!
    };
    const double w = std::log(z);  // in (-0.694, 0)
    double val = constants::zeta3 + constants::zeta2 * w +
                 0.5 * w * w * (1.5 - std::log(-w));
    double wk = w * w * w;
    for (double coeff : kTail) {
        val += coeff * wk;
        wk *= w;
    }
    return val;
}

}  // namespace

double polylog(int n, double z) {
    if (n != 2 && n != 3) throw DomainError("polylog: order must be 2 or 3");
    if (!(z >= 0.0 && z <= 1.0)) throw DomainError("polylog: z must lie in [0, 1]");
    if (z == 0.0) return 0.0;
    if (z == 1.0) return (n == 2) ? constants::zeta2 : constants::zeta3;
    if (z <= 0.5) return polylog_series(n, z);
    return (n == 2) ? dilog_near_one(z) : trilog_near_one(z);
}

double kernel_h(double q) {
    if (!(std::isfinite(q) && q >= 0.0))
        throw DomainError("kernel_h: q must be finite and >= 0");
    // h(q) = zeta(3)/4 - q^2/4 + O(q^3 ln q); the ln(2q) pieces of the
    // three terms cancel, so the small-q limit is regular.
    if (q < 1e-5) return 0.25 * constants::zeta3 - 0.25 * q * q;
    const double z = std::exp(-2.0 * q);
    if (z == 0.0) return 0.0;
    const double log_term = std::log1p(-z);  // ln(1 - e^{-2q}), stable at both ends
    return 0.25 * polylog(3, z) + 0.5 * q * polylog(2, z) - 0.5 * q * q * log_term;
}

}  // namespace casimir
