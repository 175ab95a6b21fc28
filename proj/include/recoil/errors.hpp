// errors.hpp — error taxonomy shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace recoil {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: shapes, cutoffs, parameter ranges, malformed configs.
struct InvalidArgument : Error {
    using Error::Error;
};

// The integrator detected invariant drift beyond 10x tolerance mid-run.
struct IntegrationFailure : Error {
    IntegrationFailure(const std::string& msg, double t, double trace_dev, double herm_dev)
        : Error(msg), time(t), trace_deviation(trace_dev), herm_deviation(herm_dev) {}
    double time = 0.0;
    double trace_deviation = 0.0;
    double herm_deviation = 0.0;
};

// Stopping criterion not met by max_time; carries the residual populations.
struct NotConverged : Error {
    NotConverged(const std::string& msg, double t, double excited, double cavity)
        : Error(msg), time(t), excited_residual(excited), cavity_residual(cavity) {}
    double time = 0.0;
    double excited_residual = 0.0;
    double cavity_residual = 0.0;
};

// (I - S_xy) is singular: the eliminated link traps a mode the feedback
// reduction cannot remove.
struct FeedbackSingularity : Error {
    using Error::Error;
};

// |F1| ~ 0 in the closed-form Fabry-Perot triple.
struct ResonantSingularity : Error {
    using Error::Error;
};

// Thermal-state truncation captured less than the required weight.
struct CutoffTooSmall : Error {
    using Error::Error;
};

}  // namespace recoil
