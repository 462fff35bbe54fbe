#include "planch/fourier.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "fft.hpp"
#include "planch/hermite.hpp"

namespace planch {

namespace {
constexpr double kPi = std::numbers::pi;
}

struct FourierOperator::Impl {
    // dense path (materialized below the fast-path threshold)
    Eigen::MatrixXcd dense;

    // Bluestein factorization of exp(i w (j-c)(k-c)), w = step^2:
    //   pre_k  = exp(i(-w c k + w k^2 / 2))
    //   post_j = step/sqrt(2 pi) * exp(i(w c^2 - w c j + w j^2 / 2))
    //   chirp  = exp(-i w m^2 / 2) circularly convolved at pad size
    std::vector<cplx> pre, post, chirp_fft;
    std::size_t pad = 0;

    void build(const UniformGrid& grid, bool materialize_dense) {
        const std::size_t n = grid.n_points;
        const double step = grid.step();
        const double w = step * step;
        const double c = 0.5 * double(n - 1);
        const double amp = step / std::sqrt(2.0 * kPi);

        if (materialize_dense) {
            const auto t = grid.points();
            dense.resize(Eigen::Index(n), Eigen::Index(n));
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    dense(Eigen::Index(j), Eigen::Index(k)) =
                        amp * std::exp(cplx{0.0, t[j] * t[k]});
        }

        pre.resize(n);
        post.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double kk = double(k);
            pre[k] = std::exp(cplx{0.0, w * (0.5 * kk * kk - c * kk)});
            post[k] = amp * std::exp(cplx{0.0, w * (c * c - c * kk + 0.5 * kk * kk)});
        }

        pad = detail::next_pow2(2 * n - 1);
        chirp_fft.assign(pad, cplx{0.0, 0.0});
        for (std::size_t m = 0; m < n; ++m) {
            const double mm = double(m);
            const cplx b = std::exp(cplx{0.0, -0.5 * w * mm * mm});
            chirp_fft[m] = b;
            if (m > 0) chirp_fft[pad - m] = b;
        }
        detail::fft_forward(chirp_fft);
    }
};

FourierOperator::FourierOperator(const UniformGrid& grid)
    : grid_(grid), impl_(std::make_unique<Impl>()) {
    grid_.validate();
    impl_->build(grid_, grid_.n_points < kFastPathThreshold);
}

FourierOperator::~FourierOperator() = default;
FourierOperator::FourierOperator(FourierOperator&&) noexcept = default;
FourierOperator& FourierOperator::operator=(FourierOperator&&) noexcept = default;

GridFunction FourierOperator::apply_dense(const GridFunction& x) const {
    if (!(x.grid() == grid_))
        throw Error(ErrorKind::GridMismatch, "operator applied on a foreign grid");
    const std::size_t n = grid_.n_points;
    std::vector<cplx> out(n);
    if (impl_->dense.size() > 0) {
        Eigen::Map<const Eigen::VectorXcd> xv(x.values().data(), Eigen::Index(n));
        Eigen::Map<Eigen::VectorXcd> ov(out.data(), Eigen::Index(n));
        ov = impl_->dense * xv;
    } else {
        // too large to materialize: direct quadrature row by row
        const auto t = grid_.points();
        const double amp = grid_.step() / std::sqrt(2.0 * kPi);
        for (std::size_t j = 0; j < n; ++j) {
            cplx acc{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k)
                acc += x[k] * std::exp(cplx{0.0, t[j] * t[k]});
            out[j] = amp * acc;
        }
    }
    return GridFunction(grid_, std::move(out));
}

GridFunction FourierOperator::apply_fast(const GridFunction& x) const {
    if (!(x.grid() == grid_))
        throw Error(ErrorKind::GridMismatch, "operator applied on a foreign grid");
    const std::size_t n = grid_.n_points;
    const std::size_t pad = impl_->pad;

    std::vector<cplx> a(pad, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * impl_->pre[k];
    detail::fft_forward(a);
    for (std::size_t m = 0; m < pad; ++m) a[m] *= impl_->chirp_fft[m];
    detail::fft_backward(a);

    const double inv_pad = 1.0 / double(pad);
    std::vector<cplx> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = impl_->post[j] * a[j] * inv_pad;
    return GridFunction(grid_, std::move(out));
}

GridFunction FourierOperator::apply(const GridFunction& x, int power) const {
    if (power < 0 || power > 3)
        throw Error(ErrorKind::Domain, "Fourier power must lie in 0..3");
    GridFunction y = x;
    const bool fast = grid_.n_points >= kFastPathThreshold;
    for (int p = 0; p < power; ++p) y = fast ? apply_fast(y) : apply_dense(y);
    return y;
}

GridFunction FourierOperator::apply_adjoint(const GridFunction& x) const {
    // the kernel matrix is symmetric, so F* x = conj(F conj(x))
    std::vector<cplx> conj_vals(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) conj_vals[j] = std::conj(x[j]);
    GridFunction y = apply(GridFunction(grid_, std::move(conj_vals)), 1);
    for (std::size_t j = 0; j < y.size(); ++j) y[j] = std::conj(y[j]);
    return y;
}

double commutation_residual(const FourierOperator& fop, const GridFunction& x) {
    const Differentiator diff(fop.grid());
    const GridFunction lx = apply_hermite_operator(diff, x);
    const GridFunction lhs = fop.apply(lx);
    const GridFunction rhs = apply_hermite_operator(diff, fop.apply(x));
    return l2_norm(lhs - rhs) / l2_norm(lx);
}

namespace {

// Filon moments J_k = int_0^w sigma^k e^{i t sigma} d sigma, k = 0..2.
void filon_moments(double t, double w, cplx J[3]) {
    const double tw = t * w;
    if (std::abs(tw) < 0.5) {
        // Taylor series in (i t); 14 terms reach full double precision
        const cplx it{0.0, t};
        for (int k = 0; k < 3; ++k) {
            cplx term{0.0, 0.0};
            cplx p{1.0, 0.0};
            double factorial = 1.0;
            double wpow = std::pow(w, k + 1);
            for (int m = 0; m < 14; ++m) {
                term += p * (wpow / (factorial * double(k + m + 1)));
                p *= it;
                factorial *= double(m + 1);
                wpow *= w;
            }
            J[k] = term;
        }
        return;
    }
    const cplx it{0.0, t};
    const cplx eitw = std::exp(cplx{0.0, tw});
    J[0] = (eitw - 1.0) / it;
    J[1] = (w * eitw - J[0]) / it;
    J[2] = (w * w * eitw - 2.0 * J[1]) / it;
}

HalfLineFunction half_line_trig_transform(const HalfLineFunction& x, bool cosine) {
    const LogGrid& g = x.grid();
    const std::size_t m = g.n_points;
    if (m < 3)
        throw Error(ErrorKind::Resolution, "half-line transform needs >= 3 samples");

    // restrict panel sweep to the measure-weighted support
    double wmax = 0.0;
    std::vector<double> wmag(m);
    for (std::size_t j = 0; j < m; ++j) {
        wmag[j] = std::abs(x[j]) * std::sqrt(g.point(j));
        wmax = std::max(wmax, wmag[j]);
    }
    std::size_t lo = 0, hi = m - 1;
    const double cut = wmax * 1e-17;
    while (lo < hi && wmag[lo] <= cut) ++lo;
    while (hi > lo && wmag[hi] <= cut) --hi;
    lo = (lo >= 2) ? lo - 2 : 0;
    hi = std::min(hi + 2, m - 1);

    std::vector<double> s(m);
    for (std::size_t j = 0; j < m; ++j) s[j] = g.point(j);

    // quadratic panel coefficients over [s_p, s_p+2], sigma = s - s_p
    struct Panel {
        double a, w;
        cplx c0, c1, c2;
    };
    std::vector<Panel> panels;
    panels.reserve((hi - lo) / 2 + 1);
    for (std::size_t p = lo; p + 2 <= hi; p += 2) {
        const double a = s[p];
        const double x1 = s[p + 1] - a;
        const double w = s[p + 2] - a;
        const cplx f0 = x[p], f1 = x[p + 1], f2 = x[p + 2];
        const cplx c2 = ((f2 - f0) / w - (f1 - f0) / x1) / (w - x1);
        const cplx c1 = (f1 - f0) / x1 - c2 * x1;
        panels.push_back({a, w, f0, c1, c2});
    }
    if ((hi - lo) % 2 == 1 && hi >= 1) {  // leftover interval: linear panel
        const double a = s[hi - 1];
        const double w = s[hi] - a;
        const cplx c1 = (x[hi] - x[hi - 1]) / w;
        panels.push_back({a, w, x[hi - 1], c1, cplx{0.0, 0.0}});
    }

    const double amp = std::sqrt(2.0 / kPi);
    std::vector<cplx> out(m);
    cplx J[3];
    for (std::size_t i = 0; i < m; ++i) {
        const double t = s[i];
        cplx acc{0.0, 0.0};
        for (const Panel& pn : panels) {
            filon_moments(t, pn.w, J);
            const cplx phase = std::exp(cplx{0.0, t * pn.a});
            const cplx val = phase * (pn.c0 * J[0] + pn.c1 * J[1] + pn.c2 * J[2]);
            // e^{its} = cos(ts) + i sin(ts): the cosine part of a complex
            // integrand is Re for its real part and i*Re for its imaginary part
            if (cosine)
                acc += cplx{val.real(), 0.0};
            else
                acc += cplx{val.imag(), 0.0};
        }
        out[i] = amp * acc;
    }
    return HalfLineFunction(g, std::move(out));
}

}  // namespace

HalfLineFunction cosine_transform(const HalfLineFunction& x) {
    // complex inputs transform linearly: handle real and imaginary parts
    const std::size_t m = x.size();
    bool is_real = true;
    for (std::size_t j = 0; j < m; ++j)
        if (x[j].imag() != 0.0) { is_real = false; break; }
    if (is_real) return half_line_trig_transform(x, true);

    std::vector<cplx> re(m), im(m);
    for (std::size_t j = 0; j < m; ++j) {
        re[j] = cplx{x[j].real(), 0.0};
        im[j] = cplx{x[j].imag(), 0.0};
    }
    HalfLineFunction tr = half_line_trig_transform(HalfLineFunction(x.grid(), std::move(re)), true);
    HalfLineFunction ti = half_line_trig_transform(HalfLineFunction(x.grid(), std::move(im)), true);
    std::vector<cplx> out(m);
    for (std::size_t j = 0; j < m; ++j) out[j] = cplx{tr[j].real(), ti[j].real()};
    return HalfLineFunction(x.grid(), std::move(out));
}

HalfLineFunction sine_transform(const HalfLineFunction& x) {
    const std::size_t m = x.size();
    bool is_real = true;
    for (std::size_t j = 0; j < m; ++j)
        if (x[j].imag() != 0.0) { is_real = false; break; }
    if (is_real) return half_line_trig_transform(x, false);

    std::vector<cplx> re(m), im(m);
    for (std::size_t j = 0; j < m; ++j) {
        re[j] = cplx{x[j].real(), 0.0};
        im[j] = cplx{x[j].imag(), 0.0};
    }
    HalfLineFunction tr = half_line_trig_transform(HalfLineFunction(x.grid(), std::move(re)), false);
    HalfLineFunction ti = half_line_trig_transform(HalfLineFunction(x.grid(), std::move(im)), false);
    std::vector<cplx> out(m);
    for (std::size_t j = 0; j < m; ++j) out[j] = cplx{tr[j].real(), ti[j].real()};
    return HalfLineFunction(x.grid(), std::move(out));
}

}  // namespace planch
