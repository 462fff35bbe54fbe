#include "planch/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "interp.hpp"
#include "planch/gamma.hpp"

namespace planch {

namespace {

constexpr double kPi = std::numbers::pi;

// smooth cosine ramp over the outer fraction of samples, 1 in the interior
std::vector<double> make_taper(std::size_t n, double fraction) {
    std::vector<double> w(n, 1.0);
    const std::size_t nt = std::size_t(double(n) * fraction);
    for (std::size_t i = 0; i < nt; ++i) {
        const double r = 0.5 * (1.0 - std::cos(kPi * double(i + 1) / double(nt)));
        w[i] = r;
        w[n - 1 - i] = r;
    }
    return w;
}

}  // namespace

struct MellinTransform::Impl {
    std::vector<double> taper_u;    // M samples
    std::vector<double> taper_eta;  // M+1 samples
};

LogGrid MellinTransform::default_grid(std::size_t n_points) {
    return LogGrid::span(1e-25, 1e9, n_points);
}

MellinTransform::MellinTransform(const LogGrid& grid)
    : grid_(grid),
      eta_grid_(kPi / grid.log_step, grid.n_points + 1),
      impl_(std::make_unique<Impl>()) {
    if (grid_.n_points % 2 != 0)
        throw Error(ErrorKind::Config, "Mellin grid needs an even point count");
    impl_->taper_u = make_taper(grid_.n_points, kTaperFraction);
    impl_->taper_eta = make_taper(grid_.n_points + 1, kTaperFraction);
}

MellinTransform::~MellinTransform() = default;
MellinTransform::MellinTransform(MellinTransform&&) noexcept = default;
MellinTransform& MellinTransform::operator=(MellinTransform&&) noexcept = default;

CriticalLineFunction MellinTransform::forward(const HalfLineFunction& f) const {
    if (!(f.grid() == grid_))
        throw Error(ErrorKind::GridMismatch, "function lives on a foreign log grid");
    const std::size_t m = grid_.n_points;

    // decay precondition on the measure-weighted samples sqrt(t) f(t)
    double wmax = 0.0;
    std::vector<cplx> w(m);
    for (std::size_t j = 0; j < m; ++j) {
        w[j] = std::exp(0.5 * grid_.u(j)) * f[j];
        wmax = std::max(wmax, std::abs(w[j]));
    }
    if (wmax > 0.0) {
        const double tail = std::max(std::abs(w[0]), std::abs(w[m - 1])) / wmax;
        if (tail > kTailTolerance)
            throw TailError(tail, "half-line tails not decayed below 1e-12 "
                                  "(measured relative tail " + std::to_string(tail) + ")");
    }

    for (std::size_t j = 0; j < m; ++j) w[j] *= impl_->taper_u[j];
    detail::fft_backward(w);  // S_k = sum_j w_j e^{+2 pi i jk / m}

    // phi(eta_p) = delta e^{i eta_p u0} S_{(p - m/2) mod m}, p = 0..m
    const double delta = grid_.log_step;
    const double u0 = grid_.log_min;
    std::vector<cplx> out(m + 1);
    for (std::size_t p = 0; p <= m; ++p) {
        const long signed_m = long(p) - long(m / 2);
        const std::size_t bin = std::size_t(((signed_m % long(m)) + long(m)) % long(m));
        const double eta = eta_grid_.point(p);
        out[p] = delta * std::exp(cplx{0.0, eta * u0}) * w[bin];
    }
    return CriticalLineFunction(eta_grid_, std::move(out));
}

HalfLineFunction MellinTransform::inverse(const CriticalLineFunction& phi_in) const {
    const std::size_t m = grid_.n_points;

    // resample onto the engine's locked eta grid when needed (cubic in eta)
    const CriticalLineFunction* phi = &phi_in;
    CriticalLineFunction resampled = CriticalLineFunction::zeros(eta_grid_);
    if (!(phi_in.grid() == eta_grid_)) {
        const EtaGrid& src = phi_in.grid();
        const long ns = long(src.n_points);
        for (std::size_t p = 0; p <= m; ++p) {
            const double eta = eta_grid_.point(p);
            const double pos = (eta + src.eta_max) / src.step();
            if (pos < 0.0 || pos > double(ns - 1)) continue;  // outside: zero
            long i = long(std::floor(pos));
            i = std::clamp(i, 1L, ns - 3);
            resampled[p] = detail::cubic4(phi_in[std::size_t(i - 1)], phi_in[std::size_t(i)],
                                  phi_in[std::size_t(i + 1)], phi_in[std::size_t(i + 2)],
                                  pos - double(i));
        }
        phi = &resampled;
    }

    double pmax = 0.0;
    for (std::size_t p = 0; p <= m; ++p) pmax = std::max(pmax, std::abs((*phi)[p]));
    if (pmax > 0.0) {
        const double tail = std::max(std::abs((*phi)[0]), std::abs((*phi)[m])) / pmax;
        if (tail > kEtaTailTolerance)
            throw TailError(tail, "critical-line tails not decayed below 1e-10 "
                                  "(measured relative tail " + std::to_string(tail) + ")");
    }

    // fold the inclusive eta samples onto m DFT bins; +-H share a bin and
    // are averaged after the u0 phase is removed
    const double u0 = grid_.log_min;
    std::vector<cplx> bins(m);
    for (std::size_t p = 0; p < m; ++p) {
        const double eta = eta_grid_.point(p);
        const long signed_m = long(p) - long(m / 2);
        const std::size_t bin = std::size_t(((signed_m % long(m)) + long(m)) % long(m));
        cplx v = (*phi)[p] * impl_->taper_eta[p] * std::exp(cplx{0.0, -eta * u0});
        if (p == 0) {
            const double eta_hi = eta_grid_.point(m);
            v = 0.5 * (v + (*phi)[m] * impl_->taper_eta[m] *
                               std::exp(cplx{0.0, -eta_hi * u0}));
        }
        bins[bin] = v;
    }
    detail::fft_forward(bins);  // sum_m e^{-2 pi i m j / M}

    const double scale = eta_grid_.step() / (2.0 * kPi);
    std::vector<cplx> out(m);
    for (std::size_t j = 0; j < m; ++j)
        out[j] = scale * std::exp(-0.5 * grid_.u(j)) * bins[j];
    return HalfLineFunction(grid_, std::move(out));
}

double MellinTransform::parseval_residual(const HalfLineFunction& f,
                                          const CriticalLineFunction& phi) const {
    const double lhs = half_line_norm_sq(f);
    double acc = 0.0;
    const std::size_t n = phi.size();
    for (std::size_t p = 0; p < n; ++p) {
        const double w = (p == 0 || p == n - 1) ? 0.5 : 1.0;  // shared end bin
        acc += w * std::norm(phi[p]);
    }
    const double rhs = acc * phi.grid().step() / (2.0 * kPi);
    const double scale = std::max(lhs, rhs);
    return scale > 0.0 ? std::abs(lhs - rhs) / scale : 0.0;
}

double mellin_functional_equation_residual(const MellinTransform& mellin,
                                           const HalfLineFunction& f,
                                           TrigKind kind) {
    const HalfLineFunction transformed =
        (kind == TrigKind::Cos) ? cosine_transform(f) : sine_transform(f);
    const CriticalLineFunction lhs = mellin.forward(transformed);

    const CriticalLineFunction phi_f = mellin.forward(f);
    const std::size_t n = phi_f.size();
    const double ln2 = std::log(2.0);
    const double shift = (kind == TrigKind::Cos) ? 0.25 : 0.75;

    double diff_sq = 0.0, lhs_sq = 0.0, rhs_sq = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
        const double eta = phi_f.grid().point(p);
        // phi_f(1 - zeta) on the line is the eta-reflection, exact on the
        // symmetric inclusive grid
        const cplx reflected = phi_f[n - 1 - p];
        const cplx kernel = std::exp(cplx{0.0, eta * ln2} +
                                     log_gamma(cplx{shift, 0.5 * eta}) -
                                     log_gamma(cplx{shift, -0.5 * eta}));
        const cplx rhs = reflected * kernel;
        const double w = (p == 0 || p == n - 1) ? 0.5 : 1.0;
        diff_sq += w * std::norm(lhs[p] - rhs);
        lhs_sq += w * std::norm(lhs[p]);
        rhs_sq += w * std::norm(rhs);
    }
    const double scale = std::sqrt(std::max(lhs_sq, rhs_sq));
    return scale > 0.0 ? std::sqrt(diff_sq) / scale : 0.0;
}

double functional_kernel_modulus_deviation(const EtaGrid& grid) {
    double worst = 0.0;
    for (std::size_t p = 0; p < grid.n_points; ++p) {
        const double eta = grid.point(p);
        const cplx kernel = std::exp(cplx{0.0, eta * std::log(2.0)} +
                                     log_gamma(cplx{0.25, 0.5 * eta}) -
                                     log_gamma(cplx{0.25, -0.5 * eta}));
        worst = std::max(worst, std::abs(std::abs(kernel) - 1.0));
    }
    return worst;
}

}  // namespace planch
