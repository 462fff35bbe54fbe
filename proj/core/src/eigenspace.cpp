#include "planch/eigenspace.hpp"

namespace planch {

namespace {

constexpr cplx kI{0.0, 1.0};

// i^k for k in 0..3, exact
cplx ipow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace

EigenLabel EigenLabel::from_value(cplx lambda) {
    for (int k = 0; k < 4; ++k) {
        if (lambda == ipow(k)) {
            const bool even = (k % 2 == 0);
            return EigenLabel{ipow(k), even ? Parity::Even : Parity::Odd,
                              even ? 0.25 : 0.75, k};
        }
    }
    throw Error(ErrorKind::Domain, "eigenvalue must be one of {1, i, -1, -i}");
}

EigenLabel EigenLabel::from_token(const std::string& token) {
    if (token == "1" || token == "+1") return from_value({1.0, 0.0});
    if (token == "i" || token == "+i") return from_value({0.0, 1.0});
    if (token == "-1") return from_value({-1.0, 0.0});
    if (token == "-i") return from_value({0.0, -1.0});
    throw Error(ErrorKind::Config, "unknown eigenvalue token '" + token +
                                       "' (expected 1, i, -1, or -i)");
}

const std::array<EigenLabel, 4>& EigenLabel::all() {
    static const std::array<EigenLabel, 4> labels = {
        from_value({1.0, 0.0}), from_value({0.0, 1.0}),
        from_value({-1.0, 0.0}), from_value({0.0, -1.0})};
    return labels;
}

std::string EigenLabel::token() const {
    switch (power_index) {
        case 0: return "1";
        case 1: return "i";
        case 2: return "-1";
        default: return "-i";
    }
}

GridFunction project(const FourierOperator& fop, const GridFunction& x,
                     const EigenLabel& label) {
    // P_lambda x = 1/4 sum_k lambda^{-k} F^k x, lambda^{-k} = i^{-k*power}
    GridFunction acc = x;
    GridFunction fx = x;
    for (int k = 1; k < 4; ++k) {
        fx = fop.apply(fx);
        acc = acc + ipow(-k * label.power_index) * fx;
    }
    return cplx{0.25, 0.0} * acc;
}

std::array<GridFunction, 4> decompose(const FourierOperator& fop,
                                      const GridFunction& x) {
    // share the three Fourier applications across the four projectors
    std::array<GridFunction, 4> powers = {x, fop.apply(x), x, x};
    powers[2] = fop.apply(powers[1]);
    powers[3] = fop.apply(powers[2]);

    std::array<GridFunction, 4> out = {
        GridFunction::zeros(x.grid()), GridFunction::zeros(x.grid()),
        GridFunction::zeros(x.grid()), GridFunction::zeros(x.grid())};
    for (int li = 0; li < 4; ++li) {
        GridFunction acc = powers[0];
        for (int k = 1; k < 4; ++k) acc = acc + ipow(-k * li) * powers[k];
        out[std::size_t(li)] = cplx{0.25, 0.0} * acc;
    }
    return out;
}

CoefficientVector coefficient_filter(const CoefficientVector& c,
                                     const EigenLabel& label) {
    CoefficientVector out = c;
    for (std::size_t n = 0; n < out.coeffs.size(); ++n)
        if (!label.matches_index(n)) out.coeffs[n] = cplx{0.0, 0.0};
    return out;
}

}  // namespace planch
