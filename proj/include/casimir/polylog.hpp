#pragma once

namespace casimir {

// Polylogarithm Li_n(z) = sum_{k>=1} z^k / k^n for n in {2, 3} and
// z in [0, 1]. Absolute accuracy is better than 1e-12 over the whole
// domain; the endpoints Li_2(1) = pi^2/6 and Li_3(1) = zeta(3) are
// returned as exact limiting cases.
double polylog(int n, double z);

// Cavity force kernel
//
//   h(q) = 1/4 Li_3(e^{-2q}) + q/2 Li_2(e^{-2q}) - q^2/2 ln(1 - e^{-2q})
//
// for q >= 0. h(0) = zeta(3)/4, h is strictly decreasing and decays
// like e^{-2q}; its integral over (0, inf) is pi^4/240, which ties the
// kernel to the 240 in the closed-form cavity force.
double kernel_h(double q);

}  // namespace casimir
