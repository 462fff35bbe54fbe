#pragma once

#include <stdexcept>
#include <string>

namespace planch {

/// Failure categories surfaced by the numerical engines.
///
/// The CLI maps these onto its exit-code contract: config/usage problems
/// exit 2, engine diagnostics (tails, resolution, poles, ...) exit 3.
enum class ErrorKind {
    GridMismatch,      ///< operands live on different grids
    Resolution,        ///< grid cannot resolve the requested object
    Pole,              ///< evaluation too close to a Gamma pole
    Domain,            ///< argument outside the valid strip/range
    Tail,              ///< function not decayed at the grid ends
    Parity,            ///< declared parity violated or mismatched with lambda
    Weight,            ///< weighted-L2 admissibility condition fails
    NotEigenfunction,  ///< input fails the eigenfunction certification
    LengthMismatch,    ///< coefficient/basis size disagreement
    Parse,             ///< malformed input file
    Config,            ///< invalid run configuration
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// PoleError carries the index of the offending non-positive-integer pole.
class PoleError : public Error {
public:
    PoleError(long pole_index, const std::string& what)
        : Error(ErrorKind::Pole, what), pole_index_(pole_index) {}

    long pole_index() const noexcept { return pole_index_; }

private:
    long pole_index_;
};

/// TailError reports the measured relative tail magnitude that broke the
/// decay precondition.
class TailError : public Error {
public:
    TailError(double tail_magnitude, const std::string& what)
        : Error(ErrorKind::Tail, what), tail_magnitude_(tail_magnitude) {}

    double tail_magnitude() const noexcept { return tail_magnitude_; }

private:
    double tail_magnitude_;
};

/// NotEigenfunctionError carries the measured eigen-residual of the input.
class NotEigenfunctionError : public Error {
public:
    NotEigenfunctionError(double residual, const std::string& what)
        : Error(ErrorKind::NotEigenfunction, what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace planch
