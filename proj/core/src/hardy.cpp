#include "planch/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "interp.hpp"
#include "planch/gamma.hpp"

namespace planch {

namespace {

double parity_defect_of(const CriticalLineFunction& f, Parity parity) {
    const std::size_t n = f.size();
    double diff_sq = 0.0, norm_sq = 0.0;
    const double sign = (parity == Parity::Even) ? 1.0 : -1.0;
    for (std::size_t p = 0; p < n; ++p) {
        diff_sq += std::norm(f[p] - sign * f[n - 1 - p]);
        norm_sq += std::norm(f[p]);
    }
    return norm_sq > 0.0 ? std::sqrt(diff_sq / norm_sq) : 0.0;
}

CriticalLineFunction resample_eta(const CriticalLineFunction& f, const EtaGrid& target) {
    if (f.grid() == target) return f;
    const long ns = long(f.grid().n_points);
    CriticalLineFunction out = CriticalLineFunction::zeros(target);
    for (std::size_t p = 0; p < target.n_points; ++p) {
        const double pos = (target.point(p) + f.grid().eta_max) / f.grid().step();
        if (pos < 0.0 || pos > double(ns - 1)) continue;
        long i = long(std::floor(pos));
        i = std::clamp(i, 1L, ns - 3);
        out[p] = detail::cubic4(f[std::size_t(i - 1)], f[std::size_t(i)],
                                f[std::size_t(i + 1)], f[std::size_t(i + 2)],
                                pos - double(i));
    }
    return out;
}

constexpr double kParityTolerance = 1e-6;

}  // namespace

double PsiFunction::parity_defect() const {
    return parity_defect_of(samples, declared_parity);
}

HardyTitchmarsh::HardyTitchmarsh(const UniformGrid& grid, const LogGrid& log_grid)
    : grid_(grid), mellin_(log_grid), fourier_(grid) {}

CriticalLineFunction HardyTitchmarsh::kernel(const EigenLabel& label) const {
    const double g = label.gamma_shift;
    const double ln2 = std::log(2.0);
    return CriticalLineFunction::sample(mellin_.eta_grid(), [&](double eta) {
        return std::exp(log_gamma(cplx{g, 0.5 * eta}) + cplx{0.0, 0.5 * eta * ln2});
    });
}

double HardyTitchmarsh::stable_window(const EigenLabel& label) const {
    const double g = label.gamma_shift;
    const double floor_mag =
        kKernelFloor * std::abs(std::exp(log_gamma(cplx{g, 0.0})));
    const EtaGrid& eg = mellin_.eta_grid();
    double window = 0.0;
    for (std::size_t p = 0; p < eg.n_points; ++p) {
        const double eta = eg.point(p);
        if (std::abs(std::exp(log_gamma(cplx{g, 0.5 * eta}))) >= floor_mag)
            window = std::max(window, std::abs(eta));
    }
    return window;
}

GridFunction HardyTitchmarsh::synthesize_eigenfunction(const PsiFunction& psi,
                                                       const EigenLabel& label) const {
    const Parity required =
        (label.power_index == 0 || label.power_index == 1) ? Parity::Even : Parity::Odd;
    if (psi.declared_parity != required)
        throw Error(ErrorKind::Parity,
                    "psi must be " +
                        std::string(required == Parity::Even ? "even" : "odd") +
                        " for lambda = " + label.token());
    if (psi.parity_defect() > kParityTolerance)
        throw Error(ErrorKind::Parity, "psi samples violate the declared parity");

    const CriticalLineFunction samples = resample_eta(psi.samples, mellin_.eta_grid());
    const CriticalLineFunction kern = kernel(label);

    CriticalLineFunction phi = CriticalLineFunction::zeros(mellin_.eta_grid());
    double weighted_max = 0.0;
    for (std::size_t p = 0; p < phi.size(); ++p) {
        phi[p] = samples[p] * kern[p];
        if (!std::isfinite(phi[p].real()) || !std::isfinite(phi[p].imag()))
            throw Error(ErrorKind::Weight, "psi * Gamma kernel is not finite");
        weighted_max = std::max(weighted_max, std::abs(phi[p]));
    }
    // admissibility on the truncated grid: the weighted integrand must have
    // decayed at the eta ends, otherwise the weighted-L2 integral is
    // unresolved (effectively divergent) on this window
    if (weighted_max > 0.0) {
        const double tail =
            std::max(std::abs(phi[0]), std::abs(phi[phi.size() - 1])) / weighted_max;
        if (tail > 1e-10)
            throw Error(ErrorKind::Weight,
                        "weighted-L2 admissibility integrand not decayed at the "
                        "eta window edge");
    }

    const HalfLineFunction half = mellin_.inverse(phi);
    return extend_to_line(half, label.parity, grid_);
}

PsiFunction HardyTitchmarsh::analyze_eigenfunction(const GridFunction& x,
                                                   const EigenLabel& label) const {
    const double norm_x = l2_norm(x);
    if (norm_x == 0.0)
        throw NotEigenfunctionError(0.0, "cannot analyze the zero function");
    const double eig_res =
        l2_norm(fourier_.apply(x) - label.value * x) / norm_x;
    if (eig_res > kEigenCertification)
        throw NotEigenfunctionError(
            eig_res, "input is not an eigenfunction for lambda = " + label.token() +
                         " (residual " + std::to_string(eig_res) + ")");
    const double sign = (label.parity == Parity::Even) ? 1.0 : -1.0;
    const double par_defect = l2_norm(x - sign * reflect(x)) / norm_x;
    if (par_defect > 1e-3)
        throw Error(ErrorKind::Parity, "input lacks the parity of lambda = " +
                                           label.token());

    const HalfLineFunction half = restrict_to_half_line(x, mellin_.grid());
    const CriticalLineFunction phi = mellin_.forward(half);
    const CriticalLineFunction kern = kernel(label);
    const double floor_mag =
        kKernelFloor * std::abs(std::exp(log_gamma(cplx{label.gamma_shift, 0.0})));

    CriticalLineFunction psi = CriticalLineFunction::zeros(mellin_.eta_grid());
    for (std::size_t p = 0; p < psi.size(); ++p) {
        if (std::abs(kern[p]) >= floor_mag)
            psi[p] = phi[p] / kern[p];
        // beyond the stable window the division amplifies truncation noise:
        // samples stay zeroed
    }

    const Parity psi_parity =
        (label.power_index == 0 || label.power_index == 1) ? Parity::Even : Parity::Odd;
    return PsiFunction{std::move(psi), psi_parity};
}

double HardyTitchmarsh::parseval_ratio(const GridFunction& x, const PsiFunction& psi,
                                       const EigenLabel& label) const {
    // int_0^inf |x|^2 dt on the uniform grid
    double num = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x.grid().point(j) > 0.0) num += std::norm(x[j]);
    num *= x.grid().step();

    const CriticalLineFunction samples = resample_eta(psi.samples, mellin_.eta_grid());
    const CriticalLineFunction kern = kernel(label);
    double den = 0.0;
    for (std::size_t p = 0; p < samples.size(); ++p) {
        const double w = (p == 0 || p + 1 == samples.size()) ? 0.5 : 1.0;
        den += w * std::norm(samples[p]) * std::norm(kern[p]);
    }
    den *= mellin_.eta_grid().step();
    if (den == 0.0)
        throw Error(ErrorKind::Weight, "psi weighted norm vanishes");
    return num / den;
}

}  // namespace planch
