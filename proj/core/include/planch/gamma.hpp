#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>

#include "planch/error.hpp"

namespace planch {

using cplx = std::complex<double>;

/**
 * Principal-branch log-Gamma.
 *
 * Lanczos approximation (g = 7) on Re z >= 1/2; the reflection formula with
 * a continuous log-sine on the rest of the plane, conjugated for Im z < 0 so
 * log_gamma(conj z) == conj(log_gamma(z)) away from the cut (-inf, 0].
 *
 * Throws PoleError when z is within 1e-12 of a non-positive integer.
 */
cplx log_gamma(cplx z);

/// Gamma(z) = exp(log_gamma(z)).
cplx gamma_fn(cplx z);

/// Index of the nearest non-positive-integer pole, or 1 if z is not near one.
long nearest_pole(cplx z);

enum class TrigKind { Cos, Sin };

/**
 * Closed form of the oscillatory moment integral over (0, inf):
 *
 *   int cos(s) s^{z-1} ds = cos(pi z / 2) Gamma(z)     (0 < Re z < 1)
 *   int sin(s) s^{z-1} ds = sin(pi z / 2) Gamma(z)
 *
 * Only the closed form is evaluated here; the truncated integral appears in
 * the test oracle.  Throws DomainError outside the strip.
 */
cplx cos_sin_moment(cplx z, TrigKind kind);

/// Max relative residual per identity, keyed by identity name
/// ("recurrence", "reflection", "duplication", "cosine", "sine").
struct GammaIdentityReport {
    std::map<std::string, double> max_residual;
    double worst() const;
};

/**
 * Evaluates both sides of the five Gamma identities at each sample:
 * recurrence, reflection, Legendre duplication, and the cosine/sine
 * half-argument identities.  Samples must avoid poles of every factor.
 */
GammaIdentityReport check_gamma_identities(std::span<const cplx> samples);

}  // namespace planch
