#pragma once

#include <memory>
#include <vector>

#include "planch/grid.hpp"

namespace planch {

namespace detail {
class SpectralDerivative;  // seam-corrected FFT differentiation (internal)
}

/**
 * First- and second-derivative operators on a UniformGrid.
 *
 * Derivatives are Fourier-spectral on the periodic extension of the grid.
 * Because sampled functions are not exactly periodic, the value/derivative
 * jumps across the wrap seam at +-(T + step/2) are estimated from one-sided
 * endpoint fits and removed with polynomial corrections before the FFT;
 * the corrections' derivatives are added back in closed form.  For decaying
 * functions the corrections are at roundoff level, but they keep the
 * operator accurate out to basis indices where boundary values reach ~1e-6.
 */
class Differentiator {
public:
    explicit Differentiator(const UniformGrid& grid);
    ~Differentiator();
    Differentiator(Differentiator&&) noexcept;
    Differentiator& operator=(Differentiator&&) noexcept;

    GridFunction first(const GridFunction& x) const;
    GridFunction second(const GridFunction& x) const;

    const UniformGrid& grid() const { return grid_; }

private:
    UniformGrid grid_;
    std::unique_ptr<detail::SpectralDerivative> impl_;
};

/// Creation operator: (a+ x)(t) = -x'(t) + t x(t).
GridFunction apply_raising(const Differentiator& d, const GridFunction& x);

/// Annihilation operator: (a x)(t) = x'(t) + t x(t).
GridFunction apply_lowering(const Differentiator& d, const GridFunction& x);

/// Hermite operator: (L x)(t) = -x''(t) + t^2 x(t).
GridFunction apply_hermite_operator(const Differentiator& d, const GridFunction& x);

/// Largest basis size the grid resolves: the classical turning point
/// sqrt(2n+1) of the top function must sit inside the grid with decay
/// margin and below the Nyquist wavenumber.  64 on the default grid.
std::size_t max_basis_size(const UniformGrid& grid);

/**
 * The first N_h normalized Hermite functions e_0 ... e_{N_h-1} on a grid,
 * with Hermite eigenvalues 2n+1 and Fourier eigenvalues i^n.
 *
 * Construction uses the stable three-term recurrence
 *   e_{n+1} = sqrt(2/(n+1)) t e_n - sqrt(n/(n+1)) e_{n-1},
 * seeded with e_0 = pi^{-1/4} exp(-t^2/2).  Raw ladder iterates h_n grow
 * like sqrt(2^n n!) and are kept out of the constructor; the ladder
 * relation a+ e_n = sqrt(2(n+1)) e_{n+1} is verified in tests instead.
 * A single modified Gram-Schmidt sweep runs afterwards if any off-diagonal
 * inner product exceeds 1e-11 (discretization drift at large n).
 */
class HermiteBasis {
public:
    static HermiteBasis build(const UniformGrid& grid, std::size_t n_functions);

    const UniformGrid& grid() const { return grid_; }
    std::size_t size() const { return functions_.size(); }
    const GridFunction& function(std::size_t n) const { return functions_[n]; }
    const std::vector<GridFunction>& functions() const { return functions_; }

    /// lambda_n = 2n + 1
    double hermite_eigenvalue(std::size_t n) const { return 2.0 * double(n) + 1.0; }
    /// mu_n = i^n
    cplx fourier_eigenvalue(std::size_t n) const;

private:
    HermiteBasis(UniformGrid grid, std::vector<GridFunction> fns)
        : grid_(grid), functions_(std::move(fns)) {}

    UniformGrid grid_;
    std::vector<GridFunction> functions_;
};

/// Hermite expansion coefficients of a grid function.
struct CoefficientVector {
    std::vector<cplx> coeffs;

    std::size_t size() const { return coeffs.size(); }
    double norm_sq() const;
};

/// c_n = <x, e_n>.
CoefficientVector expand(const GridFunction& x, const HermiteBasis& basis);

/// sum c_n e_n; coefficient count must not exceed the basis size.
GridFunction synthesize(const CoefficientVector& c, const HermiteBasis& basis);

/**
 * Diagnostic for membership in the domain of L (coefficients must satisfy
 * sum lambda_n^2 |c_n|^2 < inf).  Reports the truncated weighted sum and
 * the least-squares slope of log|c_n| against log n over the tail of the
 * expansion; slope below -1.5 is classified as "decaying" (heuristic --
 * a truncated expansion can never certify convergence of the full series).
 */
struct DomainDiagnostic {
    double weighted_sum = 0.0;   // sum (2n+1)^2 |c_n|^2 over the truncation
    double tail_slope = 0.0;     // d log|c_n| / d log n on the tail
    bool decaying = false;
};

DomainDiagnostic domain_diagnostic(const CoefficientVector& c);

}  // namespace planch
