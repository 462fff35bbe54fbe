#include "planch/grid.hpp"

#include <algorithm>
#include <cmath>

#include "interp.hpp"

namespace planch {

void require_same_grid(const GridFunction& f, const GridFunction& g) {
    if (!(f.grid() == g.grid()))
        throw Error(ErrorKind::GridMismatch, "grid functions live on different grids");
}

cplx inner_product(const GridFunction& f, const GridFunction& g) {
    require_same_grid(f, g);
    cplx acc{0.0, 0.0};
    const auto& fv = f.values();
    const auto& gv = g.values();
    for (std::size_t j = 0; j < fv.size(); ++j) acc += fv[j] * std::conj(gv[j]);
    return f.grid().step() * acc;
}

double l2_norm(const GridFunction& f) {
    double acc = 0.0;
    for (const cplx& v : f.values()) acc += std::norm(v);
    return std::sqrt(f.grid().step() * acc);
}

GridFunction reflect(const GridFunction& x) {
    std::vector<cplx> v(x.values().rbegin(), x.values().rend());
    return GridFunction(x.grid(), std::move(v));
}

std::pair<GridFunction, GridFunction> parity_split(const GridFunction& x) {
    const std::size_t n = x.size();
    std::vector<cplx> even(n), odd(n);
    for (std::size_t j = 0; j < n; ++j) {
        const cplx mirrored = x[n - 1 - j];
        even[j] = 0.5 * (x[j] + mirrored);
        odd[j] = x[j] - even[j];  // exact reconstruction: even + odd == x
    }
    return {GridFunction(x.grid(), std::move(even)),
            GridFunction(x.grid(), std::move(odd))};
}

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    std::vector<cplx> v(a.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = a[j] + b[j];
    return GridFunction(a.grid(), std::move(v));
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    std::vector<cplx> v(a.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = a[j] - b[j];
    return GridFunction(a.grid(), std::move(v));
}

GridFunction operator*(cplx s, const GridFunction& a) {
    std::vector<cplx> v(a.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = s * a[j];
    return GridFunction(a.grid(), std::move(v));
}

LogGrid LogGrid::span(double t_min, double t_max, std::size_t M) {
    if (!(t_min > 0.0) || !(t_max > t_min))
        throw Error(ErrorKind::Config, "log grid needs 0 < t_min < t_max");
    if (M < 2) throw Error(ErrorKind::Config, "log grid needs >= 2 points");
    const double u0 = std::log(t_min);
    const double delta = (std::log(t_max) - u0) / double(M - 1);
    return LogGrid(u0, delta, M);
}

double half_line_norm_sq(const HalfLineFunction& f) {
    const LogGrid& g = f.grid();
    double acc = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j)
        acc += std::norm(f[j]) * g.point(j);
    return acc * g.log_step;
}

double half_line_norm(const HalfLineFunction& f) {
    return std::sqrt(half_line_norm_sq(f));
}

double critical_line_norm(const CriticalLineFunction& f) {
    double acc = 0.0;
    for (const cplx& v : f.values()) acc += std::norm(v);
    return std::sqrt(f.grid().step() * acc);
}

GridFunction extend_to_line(const HalfLineFunction& f, Parity parity,
                            const UniformGrid& grid) {
    const LogGrid& lg = f.grid();
    if (lg.n_points < 4)
        throw Error(ErrorKind::Resolution, "half-line grid too small for cubic interpolation");
    if (lg.t_max() < grid.half_width)
        throw Error(ErrorKind::Resolution,
                    "half-line samples do not cover the target grid half-width");
    // cubic-in-log interpolation needs a few samples per target cell where
    // the log grid is at its coarsest inside the target range
    if (lg.log_step > 0.25)
        throw Error(ErrorKind::Resolution, "half-line log grid too sparse for target grid");

    const std::size_t n = grid.n_points;
    const long m = long(lg.n_points);
    std::vector<cplx> out(n, cplx{0.0, 0.0});
    const double sign = (parity == Parity::Even) ? 1.0 : -1.0;

    for (std::size_t j = n / 2; j < n; ++j) {  // positive half first
        const double t = grid.point(j);
        if (t == 0.0) {  // only for odd grids; forced zero under odd parity
            out[j] = (parity == Parity::Even) ? f[0] : cplx{0.0, 0.0};
            continue;
        }
        const double x = (std::log(t) - lg.log_min) / lg.log_step;
        if (x <= 0.0) {
            out[j] = f[0];  // constant extrapolation below the first sample
            continue;
        }
        if (x >= double(m - 1)) {
            out[j] = cplx{0.0, 0.0};
            continue;
        }
        long i = long(std::floor(x));
        i = std::clamp(i, 1L, m - 3);
        out[j] = detail::cubic4(f[i - 1], f[i], f[i + 1], f[i + 2], x - double(i));
    }
    for (std::size_t j = 0; j < n / 2; ++j) out[j] = sign * out[n - 1 - j];
    return GridFunction(grid, std::move(out));
}

HalfLineFunction restrict_to_half_line(const GridFunction& x, const LogGrid& grid) {
    const UniformGrid& ug = x.grid();
    const double step = ug.step();
    const double t0 = ug.point(0);
    const long n = long(ug.n_points);
    std::vector<cplx> out(grid.n_points, cplx{0.0, 0.0});
    for (std::size_t j = 0; j < grid.n_points; ++j) {
        const double t = grid.point(j);
        if (t > ug.half_width) continue;  // beyond the grid: decayed to zero
        const double pos = (t - t0) / step;
        long i = long(std::floor(pos));
        i = std::clamp(i, 1L, n - 3);
        out[j] = detail::cubic4(x[i - 1], x[i], x[i + 1], x[i + 2], pos - double(i));
    }
    return HalfLineFunction(grid, std::move(out));
}

}  // namespace planch
