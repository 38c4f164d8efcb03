#ifndef MBGAS_ERRORS_HPP
#define MBGAS_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace mbgas {

/// Bad user input: grid sizes, config files, parameter ranges.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A parameter combination that makes a formula singular (e.g. detuning = 0
/// with zero linewidth).
class SingularParameterError : public std::runtime_error {
public:
    explicit SingularParameterError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The local-field denominator 1 - (4pi/3) alpha rho came within eps of zero.
/// Carries the offending grid indices; the continuum model is not usable there.
class MossottiResonanceError : public std::runtime_error {
public:
    MossottiResonanceError(const std::string& msg, std::vector<std::size_t> points)
        : std::runtime_error(msg), offending_points(std::move(points)) {}
    std::vector<std::size_t> offending_points;
};

/// |local detuning| dropped below the configured threshold somewhere.
class SingularDetuningError : public std::runtime_error {
public:
    SingularDetuningError(const std::string& msg, double min_abs)
        : std::runtime_error(msg), min_abs_detuning(min_abs) {}
    double min_abs_detuning;
};

/// Two fields that must share a grid do not.
class GridMismatchError : public std::runtime_error {
public:
    explicit GridMismatchError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Transfer-matrix composition overflowed (long evanescent span).
class ConditioningError : public std::runtime_error {
public:
    ConditioningError(const std::string& msg, double position)
        : std::runtime_error(msg), where(position) {}
    double where;  // x coordinate of the first offending cell
};

/// Fixed-point iteration failed to reach tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, std::vector<double> history)
        : std::runtime_error(msg), residual_history(std::move(history)) {}
    std::vector<double> residual_history;
};

/// NaN/Inf appeared during time stepping.
class NumericalBlowupError : public std::runtime_error {
public:
    NumericalBlowupError(const std::string& msg, double time, double dt)
        : std::runtime_error(msg), at_time(time), step_size(dt) {}
    double at_time;
    double step_size;
};

}  // namespace mbgas

#endif
