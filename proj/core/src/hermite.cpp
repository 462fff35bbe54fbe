#include "planch/hermite.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "fft.hpp"

namespace planch {

namespace detail {

/**
 * FFT differentiation with seam-jump removal.
 *
 * The periodic extension of grid samples has period L = N * step with its
 * seam at +-L/2 (half a step beyond the boundary points).  Jumps of the
 * function and its first three derivatives across the seam are estimated
 * from one-sided quintic fits through the six samples nearest each end and
 * subtracted via polynomials q_k supported on the fundamental domain:
 * q_k is smooth inside (-L/2, L/2) and its k-th derivative jumps by one at
 * the seam.  The FFT then differentiates a C^3-periodic remainder, and the
 * interior derivatives of the corrections are added back in closed form.
 */
class SpectralDerivative {
public:
    explicit SpectralDerivative(const UniformGrid& grid)
        : n_(grid.n_points), step_(grid.step()), period_(double(n_) * step_) {
        t_ = grid.points();

        mult1_.resize(n_);
        mult2_.resize(n_);
        for (std::size_t m = 0; m < n_; ++m) {
            const double signed_m =
                (m <= n_ / 2) ? double(m) : double(m) - double(n_);
            const double k = 2.0 * std::numbers::pi * signed_m / period_;
            mult1_[m] = (m == n_ / 2) ? cplx{0.0, 0.0} : cplx{0.0, k};
            mult2_[m] = cplx{-k * k, 0.0};
        }

        // q_k and their interior derivatives
        const double L = period_;
        q_[0].resize(n_); q_[1].resize(n_); q_[2].resize(n_); q_[3].resize(n_);
        dq_[0].resize(n_); dq_[1].resize(n_); dq_[2].resize(n_); dq_[3].resize(n_);
        d2q_[0].resize(n_); d2q_[1].resize(n_); d2q_[2].resize(n_); d2q_[3].resize(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            const double t = t_[j];
            q_[0][j] = -t / L;
            q_[1][j] = -t * t / (2.0 * L);
            q_[2][j] = -t * t * t / (6.0 * L) + (L / 24.0) * t;
            q_[3][j] = -t * t * t * t / (24.0 * L) + (L / 48.0) * t * t;
            dq_[0][j] = -1.0 / L;
            dq_[1][j] = -t / L;
            dq_[2][j] = -t * t / (2.0 * L) + L / 24.0;
            dq_[3][j] = q_[2][j];
            d2q_[0][j] = 0.0;
            d2q_[1][j] = -1.0 / L;
            d2q_[2][j] = -t / L;
            d2q_[3][j] = dq_[2][j];
        }

        // one-sided quintic fit: coefficient extraction weights from the
        // inverse Vandermonde at scaled offsets 0.5 .. 5.5
        Eigen::MatrixXd V(kFitPoints, kFitPoints);
        for (int i = 0; i < kFitPoints; ++i) {
            const double xi = 0.5 + double(i);
            double p = 1.0;
            for (int c = 0; c < kFitPoints; ++c) {
                V(i, c) = p;
                p *= xi;
            }
        }
        const Eigen::MatrixXd Vinv = V.inverse();
        double factorial = 1.0;
        double scale = 1.0;
        for (int k = 0; k < 4; ++k) {
            for (int i = 0; i < kFitPoints; ++i)
                fit_w_[k][i] = Vinv(k, i) * factorial / scale;
            factorial *= double(k + 1);
            scale *= step_;
        }
    }

    std::vector<cplx> derivative(const std::vector<cplx>& x, int order) const {
        // seam jumps J_k = x^{(k)}(after) - x^{(k)}(before)
        std::array<cplx, 4> jumps{};
        for (int k = 0; k < 4; ++k) {
            cplx right{0.0, 0.0}, left{0.0, 0.0};
            for (int i = 0; i < kFitPoints; ++i) {
                right += fit_w_[k][i] * x[std::size_t(i)];
                left += fit_w_[k][i] * x[n_ - 1 - std::size_t(i)];
            }
            if (k % 2 == 1) left = -left;  // left-side local coordinate is -sigma
            jumps[k] = right - left;
        }

        std::vector<cplx> work(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            cplx corr{0.0, 0.0};
            for (int k = 0; k < 4; ++k) corr += jumps[k] * q_[k][j];
            work[j] = x[j] - corr;
        }

        fft_forward(work);
        const auto& mult = (order == 1) ? mult1_ : mult2_;
        for (std::size_t m = 0; m < n_; ++m) work[m] *= mult[m];
        fft_backward(work);

        const double inv_n = 1.0 / double(n_);
        const auto& dq = (order == 1) ? dq_ : d2q_;
        for (std::size_t j = 0; j < n_; ++j) {
            cplx corr{0.0, 0.0};
            for (int k = 0; k < 4; ++k) corr += jumps[k] * dq[k][j];
            work[j] = work[j] * inv_n + corr;
        }
        return work;
    }

private:
    static constexpr int kFitPoints = 6;

    std::size_t n_;
    double step_;
    double period_;
    std::vector<double> t_;
    std::vector<cplx> mult1_, mult2_;
    std::array<std::vector<double>, 4> q_, dq_, d2q_;
    std::array<std::array<double, kFitPoints>, 4> fit_w_;
};

}  // namespace detail

Differentiator::Differentiator(const UniformGrid& grid)
    : grid_(grid), impl_(std::make_unique<detail::SpectralDerivative>(grid)) {}
Differentiator::~Differentiator() = default;
Differentiator::Differentiator(Differentiator&&) noexcept = default;
Differentiator& Differentiator::operator=(Differentiator&&) noexcept = default;

GridFunction Differentiator::first(const GridFunction& x) const {
    if (!(x.grid() == grid_))
        throw Error(ErrorKind::GridMismatch, "derivative requested on a foreign grid");
    return GridFunction(grid_, impl_->derivative(x.values(), 1));
}

GridFunction Differentiator::second(const GridFunction& x) const {
    if (!(x.grid() == grid_))
        throw Error(ErrorKind::GridMismatch, "derivative requested on a foreign grid");
    return GridFunction(grid_, impl_->derivative(x.values(), 2));
}

GridFunction apply_raising(const Differentiator& d, const GridFunction& x) {
    GridFunction dx = d.first(x);
    const UniformGrid& g = x.grid();
    for (std::size_t j = 0; j < x.size(); ++j)
        dx[j] = -dx[j] + g.point(j) * x[j];
    return dx;
}

GridFunction apply_lowering(const Differentiator& d, const GridFunction& x) {
    GridFunction dx = d.first(x);
    const UniformGrid& g = x.grid();
    for (std::size_t j = 0; j < x.size(); ++j)
        dx[j] = dx[j] + g.point(j) * x[j];
    return dx;
}

GridFunction apply_hermite_operator(const Differentiator& d, const GridFunction& x) {
    GridFunction dxx = d.second(x);
    const UniformGrid& g = x.grid();
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double t = g.point(j);
        dxx[j] = -dxx[j] + t * t * x[j];
    }
    return dxx;
}

std::size_t max_basis_size(const UniformGrid& grid) {
    const double spatial = 0.94 * grid.half_width;
    const double nyquist = 0.5 * std::numbers::pi / grid.step();
    const double cap = std::min(spatial * spatial, nyquist * nyquist);
    if (cap < 1.0) return 0;
    return std::size_t((cap - 1.0) / 2.0) + 1;
}

HermiteBasis HermiteBasis::build(const UniformGrid& grid, std::size_t n_functions) {
    if (n_functions == 0)
        throw Error(ErrorKind::Config, "basis needs at least one function");
    if (n_functions > max_basis_size(grid))
        throw Error(ErrorKind::Resolution,
                    "basis size " + std::to_string(n_functions) +
                        " unresolvable on this grid (max " +
                        std::to_string(max_basis_size(grid)) + ")");

    const std::size_t n = grid.n_points;
    const auto t = grid.points();
    std::vector<GridFunction> fns;
    fns.reserve(n_functions);

    std::vector<cplx> e0(n);
    const double norm0 = std::pow(std::numbers::pi, -0.25);
    for (std::size_t j = 0; j < n; ++j)
        e0[j] = norm0 * std::exp(-0.5 * t[j] * t[j]);
    fns.emplace_back(grid, std::move(e0));

    if (n_functions > 1) {
        std::vector<cplx> e1(n);
        for (std::size_t j = 0; j < n; ++j)
            e1[j] = std::sqrt(2.0) * t[j] * fns[0][j];
        fns.emplace_back(grid, std::move(e1));
    }
    for (std::size_t m = 1; m + 1 < n_functions; ++m) {
        const double a = std::sqrt(2.0 / double(m + 1));
        const double b = std::sqrt(double(m) / double(m + 1));
        std::vector<cplx> next(n);
        for (std::size_t j = 0; j < n; ++j)
            next[j] = a * t[j] * fns[m][j] - b * fns[m - 1][j];
        fns.emplace_back(grid, std::move(next));
    }

    // one re-orthonormalization sweep if discretization drift shows up
    double worst_offdiag = 0.0;
    for (std::size_t p = 0; p < fns.size(); ++p)
        for (std::size_t q = p + 1; q < fns.size(); ++q)
            worst_offdiag = std::max(worst_offdiag,
                                     std::abs(inner_product(fns[p], fns[q])));
    if (worst_offdiag > 1e-11) {
        for (std::size_t q = 0; q < fns.size(); ++q) {
            for (std::size_t p = 0; p < q; ++p) {
                const cplx overlap = inner_product(fns[q], fns[p]);
                for (std::size_t j = 0; j < n; ++j)
                    fns[q][j] -= overlap * fns[p][j];
            }
            const double nrm = l2_norm(fns[q]);
            for (std::size_t j = 0; j < n; ++j) fns[q][j] /= nrm;
        }
    }

    return HermiteBasis(grid, std::move(fns));
}

cplx HermiteBasis::fourier_eigenvalue(std::size_t n) const {
    switch (n % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

double CoefficientVector::norm_sq() const {
    double acc = 0.0;
    for (const cplx& c : coeffs) acc += std::norm(c);
    return acc;
}

CoefficientVector expand(const GridFunction& x, const HermiteBasis& basis) {
    if (!(x.grid() == basis.grid()))
        throw Error(ErrorKind::GridMismatch, "expansion requested on a foreign grid");
    CoefficientVector c;
    c.coeffs.reserve(basis.size());
    for (std::size_t nidx = 0; nidx < basis.size(); ++nidx)
        c.coeffs.push_back(inner_product(x, basis.function(nidx)));
    return c;
}

GridFunction synthesize(const CoefficientVector& c, const HermiteBasis& basis) {
    if (c.size() > basis.size())
        throw Error(ErrorKind::LengthMismatch,
                    "coefficient vector longer than the basis");
    GridFunction out = GridFunction::zeros(basis.grid());
    for (std::size_t nidx = 0; nidx < c.size(); ++nidx) {
        const GridFunction& e = basis.function(nidx);
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] += c.coeffs[nidx] * e[j];
    }
    return out;
}

DomainDiagnostic domain_diagnostic(const CoefficientVector& c) {
    DomainDiagnostic diag;
    double max_mag = 0.0;
    for (std::size_t nidx = 0; nidx < c.size(); ++nidx) {
        const double lam = 2.0 * double(nidx) + 1.0;
        diag.weighted_sum += lam * lam * std::norm(c.coeffs[nidx]);
        max_mag = std::max(max_mag, std::abs(c.coeffs[nidx]));
    }

    // least-squares slope of log|c_n| vs log n over the expansion tail
    const std::size_t start = std::max<std::size_t>(2, c.size() / 4);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t used = 0;
    for (std::size_t nidx = start; nidx < c.size(); ++nidx) {
        const double mag = std::abs(c.coeffs[nidx]);
        if (mag < 1e-280 || (max_mag > 0.0 && mag < 1e-14 * max_mag)) continue;
        const double lx = std::log(double(nidx));
        const double ly = std::log(mag);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
        ++used;
    }
    if (used < 3) {
        // tail already at noise level: nothing left to diverge
        diag.tail_slope = -std::numeric_limits<double>::infinity();
        diag.decaying = true;
        return diag;
    }
    const double denom = double(used) * sxx - sx * sx;
    diag.tail_slope = (double(used) * sxy - sx * sy) / denom;
    diag.decaying = diag.tail_slope < -1.5;
    return diag;
}

}  // namespace planch
