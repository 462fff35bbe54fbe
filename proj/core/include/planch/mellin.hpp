#pragma once

#include <memory>

#include "planch/fourier.hpp"
#include "planch/grid.hpp"

namespace planch {

/**
 * Numerical Mellin transform on the critical line Re zeta = 1/2 and its
 * inverse, bound to one half-line log grid.
 *
 * With t = e^u the transform pair becomes an ordinary Fourier pair for
 * w(u) = e^{u/2} f(e^u):
 *
 *   phi(1/2 + i eta) = int w(u) e^{+i eta u} du,
 *   w(u) = 1/(2 pi) int phi(1/2 + i eta) e^{-i eta u} d eta,
 *
 * evaluated by FFT on the locked dual grids: the eta step is
 * 2 pi / (M * log_step), so eta spans [-H, H] with H = pi / log_step.
 * The critical-line grid carries M+1 samples inclusive of both ends (odd
 * count, eta = 0 on-grid); the +-H samples are the same DFT bin and are
 * averaged on inversion.
 *
 * A cosine taper over the outer 2% of samples is part of both operator
 * definitions, suppressing ringing from imperfect decay; it is identical
 * in the two directions so round trips are exact on interior supports.
 *
 * Inputs whose measure-weighted samples |f| sqrt(t) have not decayed below
 * kTailTolerance (relative) at the grid ends raise TailError.
 */
class MellinTransform {
public:
    static constexpr double kTailTolerance = 1e-12;
    static constexpr double kEtaTailTolerance = 1e-10;
    static constexpr double kTaperFraction = 0.02;

    /// Default engine grid: M log-uniform points on [1e-25, 1e9].  The wide
    /// span keeps the u-periodization error of t^0-type behavior near the
    /// origin (left tail ~ e^{u/2}) below 1e-15 and admits transforms with
    /// t^{-3/2} measure tails.
    static LogGrid default_grid(std::size_t n_points = 4096);

    explicit MellinTransform(const LogGrid& grid);
    ~MellinTransform();
    MellinTransform(MellinTransform&&) noexcept;
    MellinTransform& operator=(MellinTransform&&) noexcept;

    const LogGrid& grid() const { return grid_; }
    const EtaGrid& eta_grid() const { return eta_grid_; }

    /// phi(1/2 + i eta) = int_0^inf t^{-1/2 + i eta} f(t) dt.
    CriticalLineFunction forward(const HalfLineFunction& f) const;

    /// f(t) = 1/(2 pi) int phi(1/2 + i eta) t^{-1/2 - i eta} d eta.
    /// Inputs on a different eta grid are resampled (cubic) first.
    HalfLineFunction inverse(const CriticalLineFunction& phi) const;

    /// | int |f|^2 dt - 1/(2 pi) int |phi|^2 d eta | / max(both).
    double parseval_residual(const HalfLineFunction& f,
                             const CriticalLineFunction& phi) const;

private:
    LogGrid grid_;
    EtaGrid eta_grid_;
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/**
 * Relative L2 residual of the Mellin-side functional equation of the
 * cosine (resp. sine) transform:
 *
 *   phi_{x_c}(zeta) = phi_x(1 - zeta) * 2^{zeta - 1/2} Gamma(zeta/2) / Gamma(1/2 - zeta/2)
 *   phi_{x_s}(zeta) = phi_x(1 - zeta) * 2^{zeta - 1/2} Gamma(1/2 + zeta/2) / Gamma(1 - zeta/2)
 *
 * on the critical line, where phi(1 - zeta) is the eta-reflection of
 * phi(zeta).  The left side goes through cosine_transform / sine_transform
 * followed by the forward Mellin transform; the right side multiplies the
 * reflected spectrum by the Gamma kernel.  The two routes share no code
 * beyond the forward transform itself.
 */
double mellin_functional_equation_residual(const MellinTransform& mellin,
                                           const HalfLineFunction& f,
                                           TrigKind kind);

/// Unit-modulus kernel check: |2^{zeta-1/2} Gamma(zeta/2)/Gamma(1/2-zeta/2)|
/// at zeta = 1/2 + i eta; returns the max deviation from 1 over the grid.
double functional_kernel_modulus_deviation(const EtaGrid& grid);

}  // namespace planch
