#pragma once

// Internal cubic interpolation stencil shared by the grid, Mellin and
// Hardy-Titchmarsh translation layers.  Not installed.

#include <complex>

namespace planch::detail {

/// Catmull-Rom-style cubic through four consecutive uniform samples,
/// evaluated at fractional offset th in [0, 1] past the second point.
inline std::complex<double> cubic4(std::complex<double> fm1, std::complex<double> f0,
                                   std::complex<double> f1, std::complex<double> f2,
                                   double th) {
    const std::complex<double> b = 0.5 * (f1 - fm1);
    const std::complex<double> c = fm1 - 2.5 * f0 + 2.0 * f1 - 0.5 * f2;
    const std::complex<double> d = 0.5 * (f2 - fm1) + 1.5 * (f0 - f1);
    return f0 + th * (b + th * (c + th * d));
}

}  // namespace planch::detail
