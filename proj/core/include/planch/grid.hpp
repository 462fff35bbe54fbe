#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "planch/error.hpp"

namespace planch {

using cplx = std::complex<double>;

enum class Parity { Even, Odd };

/**
 * Uniform symmetric grid over [-T, T].
 *
 * Points are t_j = (j - (N-1)/2) * step with step = 2T/(N-1), so the grid is
 * exactly mirror-symmetric in floating point: t_{N-1-j} == -t_j bitwise.
 * N is even, hence t = 0 is never a sample and every point has a mirror
 * partner.  The quadrature weight is the uniform step (trapezoid rule; all
 * admissible functions vanish at +-T to tolerance, so the endpoint halving
 * is immaterial).
 */
struct UniformGrid {
    double half_width = 12.0;   // T
    std::size_t n_points = 1024;  // N, even, >= 4

    UniformGrid() = default;
    UniformGrid(double T, std::size_t N) : half_width(T), n_points(N) { validate(); }

    void validate() const {
        if (!(half_width > 0.0))
            throw Error(ErrorKind::Config, "grid half-width must be positive");
        if (n_points < 4 || n_points % 2 != 0)
            throw Error(ErrorKind::Config, "grid point count must be even and >= 4");
    }

    double step() const { return 2.0 * half_width / double(n_points - 1); }

    double point(std::size_t j) const {
        return (double(j) - 0.5 * double(n_points - 1)) * step();
    }

    std::vector<double> points() const {
        std::vector<double> t(n_points);
        for (std::size_t j = 0; j < n_points; ++j) t[j] = point(j);
        return t;
    }

    bool operator==(const UniformGrid&) const = default;
};

/**
 * Complex-valued samples of a function on a UniformGrid.
 */
class GridFunction {
public:
    GridFunction(UniformGrid grid, std::vector<cplx> values)
        : grid_(grid), values_(std::move(values)) {
        grid_.validate();
        if (values_.size() != grid_.n_points)
            throw Error(ErrorKind::LengthMismatch, "value count does not match grid");
    }

    static GridFunction zeros(const UniformGrid& grid) {
        return GridFunction(grid, std::vector<cplx>(grid.n_points, cplx{0.0, 0.0}));
    }

    static GridFunction sample(const UniformGrid& grid,
                               const std::function<cplx(double)>& f) {
        std::vector<cplx> v(grid.n_points);
        for (std::size_t j = 0; j < grid.n_points; ++j) v[j] = f(grid.point(j));
        return GridFunction(grid, std::move(v));
    }

    const UniformGrid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<cplx>& values() const { return values_; }
    std::vector<cplx>& values() { return values_; }
    cplx operator[](std::size_t j) const { return values_[j]; }
    cplx& operator[](std::size_t j) { return values_[j]; }

private:
    UniformGrid grid_;
    std::vector<cplx> values_;
};

/// Throws GridMismatch unless f and g share a grid.
void require_same_grid(const GridFunction& f, const GridFunction& g);

/// Weighted inner product step * sum f(t_j) conj(g(t_j)); conjugate-linear
/// in the second argument.
cplx inner_product(const GridFunction& f, const GridFunction& g);

/// L2 norm sqrt(<f, f>).
double l2_norm(const GridFunction& f);

/// x(-t): exact index reversal on the symmetric grid.
GridFunction reflect(const GridFunction& x);

/// Splits x into its even and odd parts; x_even + x_odd == x exactly.
std::pair<GridFunction, GridFunction> parity_split(const GridFunction& x);

// elementwise arithmetic on a shared grid
GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(cplx s, const GridFunction& a);

/**
 * Logarithmically spaced grid on (0, inf): t_j = exp(u0 + j*step).
 */
struct LogGrid {
    double log_min = 0.0;   // u0
    double log_step = 0.0;  // delta > 0
    std::size_t n_points = 0;

    LogGrid() = default;
    LogGrid(double u0, double delta, std::size_t M)
        : log_min(u0), log_step(delta), n_points(M) {
        validate();
    }

    /// Grid spanning [t_min, t_max] with M points, log-uniform.
    static LogGrid span(double t_min, double t_max, std::size_t M);

    void validate() const {
        if (n_points < 2) throw Error(ErrorKind::Config, "log grid needs >= 2 points");
        if (!(log_step > 0.0)) throw Error(ErrorKind::Config, "log step must be positive");
    }

    double u(std::size_t j) const { return log_min + double(j) * log_step; }
    double point(std::size_t j) const { return std::exp(u(j)); }
    double t_min() const { return point(0); }
    double t_max() const { return point(n_points - 1); }

    bool operator==(const LogGrid&) const = default;
};

/**
 * Complex samples of a function on (0, inf) over a LogGrid.  The squared
 * L2(0,inf) norm uses the measure weight t_j * step (dt = t du).
 */
class HalfLineFunction {
public:
    HalfLineFunction(LogGrid grid, std::vector<cplx> values)
        : grid_(grid), values_(std::move(values)) {
        grid_.validate();
        if (values_.size() != grid_.n_points)
            throw Error(ErrorKind::LengthMismatch, "value count does not match log grid");
    }

    static HalfLineFunction zeros(const LogGrid& grid) {
        return HalfLineFunction(grid, std::vector<cplx>(grid.n_points, cplx{0.0, 0.0}));
    }

    static HalfLineFunction sample(const LogGrid& grid,
                                   const std::function<cplx(double)>& f) {
        std::vector<cplx> v(grid.n_points);
        for (std::size_t j = 0; j < grid.n_points; ++j) v[j] = f(grid.point(j));
        return HalfLineFunction(grid, std::move(v));
    }

    const LogGrid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<cplx>& values() const { return values_; }
    std::vector<cplx>& values() { return values_; }
    cplx operator[](std::size_t j) const { return values_[j]; }
    cplx& operator[](std::size_t j) { return values_[j]; }

private:
    LogGrid grid_;
    std::vector<cplx> values_;
};

/// Squared L2(0,inf) norm, sum |f_j|^2 t_j step.
double half_line_norm_sq(const HalfLineFunction& f);
double half_line_norm(const HalfLineFunction& f);

/**
 * Uniform grid eta_j in [-H, H] on the Mellin critical line.  The point
 * count is odd so eta = 0 is always a sample.
 */
struct EtaGrid {
    double eta_max = 0.0;  // H
    std::size_t n_points = 0;  // odd

    EtaGrid() = default;
    EtaGrid(double H, std::size_t M) : eta_max(H), n_points(M) { validate(); }

    void validate() const {
        if (!(eta_max > 0.0)) throw Error(ErrorKind::Config, "eta_max must be positive");
        if (n_points < 3 || n_points % 2 == 0)
            throw Error(ErrorKind::Config, "critical-line grid needs an odd point count >= 3");
    }

    double step() const { return 2.0 * eta_max / double(n_points - 1); }
    double point(std::size_t j) const {
        return (double(j) - 0.5 * double(n_points - 1)) * step();
    }

    bool operator==(const EtaGrid&) const = default;
};

/// Samples of zeta |-> phi(1/2 + i eta) on an EtaGrid.
class CriticalLineFunction {
public:
    CriticalLineFunction(EtaGrid grid, std::vector<cplx> values)
        : grid_(grid), values_(std::move(values)) {
        grid_.validate();
        if (values_.size() != grid_.n_points)
            throw Error(ErrorKind::LengthMismatch, "value count does not match eta grid");
    }

    static CriticalLineFunction zeros(const EtaGrid& grid) {
        return CriticalLineFunction(grid, std::vector<cplx>(grid.n_points, cplx{0.0, 0.0}));
    }

    static CriticalLineFunction sample(const EtaGrid& grid,
                                       const std::function<cplx(double)>& f) {
        std::vector<cplx> v(grid.n_points);
        for (std::size_t j = 0; j < grid.n_points; ++j) v[j] = f(grid.point(j));
        return CriticalLineFunction(grid, std::move(v));
    }

    const EtaGrid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<cplx>& values() const { return values_; }
    std::vector<cplx>& values() { return values_; }
    cplx operator[](std::size_t j) const { return values_[j]; }
    cplx& operator[](std::size_t j) { return values_[j]; }

private:
    EtaGrid grid_;
    std::vector<cplx> values_;
};

/// L2(d eta) norm, step-weighted.
double critical_line_norm(const CriticalLineFunction& f);

/**
 * Extends a half-line function to the symmetric grid with the requested
 * parity.  Interpolation is cubic in u = ln t; target points below the
 * smallest half-line sample take its value unchanged (plain constant
 * extrapolation -- note that synthesized Hardy-Titchmarsh functions can
 * behave like t^{-1/2+i eta} near 0, where constant extrapolation is only
 * a zeroth-order model).  Points beyond the largest sample are zero.
 *
 * Throws Resolution if the half-line grid does not cover [EPS, T] or is
 * too coarse for cubic interpolation onto the target grid.
 */
GridFunction extend_to_line(const HalfLineFunction& f, Parity parity,
                            const UniformGrid& grid);

/// Interpolates a grid function onto a half-line log grid (cubic in t on
/// the uniform source grid); points beyond the uniform grid are zero.
HalfLineFunction restrict_to_half_line(const GridFunction& x, const LogGrid& grid);

}  // namespace planch
