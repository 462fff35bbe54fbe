#pragma once

#include <array>
#include <string>

#include "planch/fourier.hpp"
#include "planch/grid.hpp"
#include "planch/hermite.hpp"

namespace planch {

/**
 * One of the four Fourier eigenvalues {1, i, -1, -i} with its derived
 * structure: eigenfunctions are even for +-1 and odd for +-i, and the
 * Hardy-Titchmarsh Gamma kernel offset is 1/4 for +-1, 3/4 for +-i.
 */
struct EigenLabel {
    cplx value;          // lambda
    Parity parity;       // even for +-1, odd for +-i
    double gamma_shift;  // 1/4 for +-1, 3/4 for +-i
    int power_index;     // k with lambda = i^k, k in 0..3

    static EigenLabel from_value(cplx lambda);
    /// Accepts "1", "-1", "i", "-i".
    static EigenLabel from_token(const std::string& token);
    static const std::array<EigenLabel, 4>& all();

    std::string token() const;
    /// True when i^n == value.
    bool matches_index(std::size_t n) const { return int(n % 4) == power_index; }
};

/**
 * Orthogonal projector onto the lambda eigenspace,
 *   P_lambda x = 1/4 sum_{k=0..3} lambda^{-k} F^k x.
 * The lambda^{-k} weights are exact integer powers of i.  (The paper states
 * the orthogonal decomposition; this power formula is the standard
 * projector construction for an order-4 unitary.)
 */
GridFunction project(const FourierOperator& fop, const GridFunction& x,
                     const EigenLabel& label);

/// All four projections (P_1 x, P_i x, P_-1 x, P_-i x), ordered as
/// EigenLabel::all(); their sum reconstructs x.
std::array<GridFunction, 4> decompose(const FourierOperator& fop,
                                      const GridFunction& x);

/// Zeroes every coefficient whose index n has i^n != lambda.  Filtering in
/// the Hermite index is the basis-route equivalent of project().
CoefficientVector coefficient_filter(const CoefficientVector& c,
                                     const EigenLabel& label);

}  // namespace planch
