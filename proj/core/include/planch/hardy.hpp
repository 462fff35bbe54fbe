#pragma once

#include <memory>

#include "planch/eigenspace.hpp"
#include "planch/fourier.hpp"
#include "planch/grid.hpp"
#include "planch/mellin.hpp"

namespace planch {

/**
 * The free parameter psi(i eta) of the Hardy-Titchmarsh eigenspace
 * parametrization, sampled on the critical-line eta grid.  psi must be
 * even for lambda in {1, i} and odd for lambda in {-1, -i}.
 */
struct PsiFunction {
    CriticalLineFunction samples;
    Parity declared_parity;

    /// ||psi(i eta) -+ psi(-i eta)|| / ||psi||; small iff declared parity holds.
    double parity_defect() const;
};

/**
 * Both directions of the Hardy-Titchmarsh description of the four Fourier
 * eigenspaces:
 *
 *   synthesis:  phi(1/2 + i eta) = psi(i eta) 2^{i eta/2} Gamma(g + i eta/2),
 *               g = 1/4 (lambda = +-1) or 3/4 (lambda = +-i), followed by
 *               the inverse Mellin transform and an even/odd extension;
 *   analysis:   restrict to (0, inf), forward Mellin, divide by the kernel.
 *
 * The Gamma kernel is evaluated through log-Gamma and a single
 * exponentiation.  |Gamma(g + i eta/2)| decays like e^{-pi |eta| / 4}, so
 * the analysis division is only meaningful on the stable window where
 * |Gamma(g + i eta/2)| >= 1e-8 |Gamma(g)|; outside it the psi samples are
 * zeroed and the window edge is reported.
 */
class HardyTitchmarsh {
public:
    static constexpr double kKernelFloor = 1e-8;       // stable-window cut
    static constexpr double kEigenCertification = 1e-4;  // analyze precondition

    HardyTitchmarsh(const UniformGrid& grid, const LogGrid& log_grid);

    const UniformGrid& grid() const { return grid_; }
    const MellinTransform& mellin() const { return mellin_; }
    const FourierOperator& fourier() const { return fourier_; }

    /// Gamma kernel 2^{i eta/2} Gamma(g + i eta/2) on the engine eta grid.
    CriticalLineFunction kernel(const EigenLabel& label) const;

    /// Half-width of the stable eta window for the label's kernel.
    double stable_window(const EigenLabel& label) const;

    /// Builds the eigenfunction of F with eigenvalue label.value from psi.
    /// Throws ParityError if psi's declared or measured parity conflicts
    /// with the label pairing, WeightError if the weighted-L2 admissibility
    /// integral is not finite on the grid.
    GridFunction synthesize_eigenfunction(const PsiFunction& psi,
                                          const EigenLabel& label) const;

    /// Extracts psi from an (approximate) eigenfunction.  Throws
    /// NotEigenfunctionError when ||F x - lambda x|| > 1e-4 ||x||, and
    /// ParityError when x does not carry the label's parity.  Samples
    /// beyond the stable window are zeroed.
    PsiFunction analyze_eigenfunction(const GridFunction& x,
                                      const EigenLabel& label) const;

    /**
     * Ratio int_0^inf |x|^2 dt  /  int |psi|^2 |Gamma(g + i eta/2)|^2 d eta
     * over the stable window.  The paper's Parseval display for this
     * parametrization carries no constant consistent with the critical-line
     * Parseval identity, so the constant is established empirically: the
     * ratio must agree across all (x, psi) pairs within one eigenspace.
     */
    double parseval_ratio(const GridFunction& x, const PsiFunction& psi,
                          const EigenLabel& label) const;

private:
    UniformGrid grid_;
    MellinTransform mellin_;
    FourierOperator fourier_;
};

}  // namespace planch
