#pragma once

#include <stdexcept>
#include <string>

namespace emberflow {

/// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two fields (or a field and an operator input) live on different grids.
struct GridMismatchError : Error {
    using Error::Error;
};

/// A scenario, or one of its pieces, violates a documented constraint.
struct ScenarioError : Error {
    using Error::Error;
};

/// Kernel support smaller than one grid cell.
struct DegenerateKernelError : ScenarioError {
    using ScenarioError::ScenarioError;
};

/// The time-step controller could not produce a usable dt.
struct UnstableScenarioError : ScenarioError {
    using ScenarioError::ScenarioError;
};

/// The explicit update produced a non-finite value.
struct BlowUpError : Error {
    double t;
    int i, j;
    BlowUpError(double t_, int i_, int j_)
        : Error("solution blew up at t=" + std::to_string(t_) + ", first bad cell (" +
                std::to_string(i_) + "," + std::to_string(j_) + ")"),
          t(t_), i(i_), j(j_) {}
};

/// Scenario text could not be parsed; `line` is 1-based.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// File read/write failure, message carries the path.
struct IoError : Error {
    using Error::Error;
};

/// Front-geometry operation could not proceed (e.g. the target front vanished).
struct FrontError : Error {
    using Error::Error;
};

}  // namespace emberflow
