#pragma once

#include <memory>

#include "planch/grid.hpp"

namespace planch {

namespace detail {
class BluesteinPlan;
}

/**
 * Discretized unitary Fourier-Plancherel operator on a UniformGrid,
 *
 *   (F x)(t_j) = step / sqrt(2 pi) * sum_k x(t_k) exp(+i t_j t_k).
 *
 * The kernel sign is fixed to e^{+i t xi} so the Hermite functions carry
 * eigenvalues i^n; it is a hard constant, not a knob.  The t-grid doubles
 * as the frequency grid, which resolves the kernel as long as
 * T^2 <= pi N / 2 (satisfied by the default T = 12, N = 1024).
 *
 * Two evaluation paths compute the same quadrature sum:
 *   - dense:  explicit N x N matrix (reference; exact quadrature),
 *   - fast:   Bluestein chirp factorization of the non-commensurate phase
 *             e^{i t_j t_k} via zero-padded FFTs.
 * apply() uses the dense path below kFastPathThreshold points and the fast
 * path from there up; the two agree to ~1e-13 elementwise.
 */
class FourierOperator {
public:
    static constexpr std::size_t kFastPathThreshold = 2048;

    explicit FourierOperator(const UniformGrid& grid);
    ~FourierOperator();
    FourierOperator(FourierOperator&&) noexcept;
    FourierOperator& operator=(FourierOperator&&) noexcept;

    const UniformGrid& grid() const { return grid_; }

    /// F^power x for power in 0..3.
    GridFunction apply(const GridFunction& x, int power = 1) const;

    /// Adjoint F* (equals F^3 up to quadrature error).
    GridFunction apply_adjoint(const GridFunction& x) const;

    /// Reference dense-quadrature path, available at any size.
    GridFunction apply_dense(const GridFunction& x) const;

    /// Bluestein fast path, available at any size.
    GridFunction apply_fast(const GridFunction& x) const;

private:
    UniformGrid grid_;
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// ||F(Lx) - L(Fx)|| / ||Lx|| for the commutation of F with the Hermite
/// operator; both sides are computed independently.
double commutation_residual(const FourierOperator& fop, const GridFunction& x);

/**
 * Cosine / sine Fourier transforms on the half-line,
 *
 *   x_c(t) = sqrt(2/pi) int_0^inf x(s) cos(t s) ds,
 *   x_s(t) = sqrt(2/pi) int_0^inf x(s) sin(t s) ds,
 *
 * evaluated at the sample points of the input's own log grid.  Plain
 * quadrature cannot follow cos(ts) once t s * log_step > O(1), so each
 * output point integrates a panel-wise quadratic interpolant of x against
 * the oscillatory kernel in closed form (Filon quadrature); accuracy is
 * then uniform in t.  Cost is O(M^2) panels-times-outputs.
 */
HalfLineFunction cosine_transform(const HalfLineFunction& x);
HalfLineFunction sine_transform(const HalfLineFunction& x);

}  // namespace planch
