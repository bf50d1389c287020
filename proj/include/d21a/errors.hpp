#pragma once

#include <stdexcept>
#include <string>

namespace d21a {

/// Division by a zero scalar or inversion of a non-invertible element.
struct arithmetic_error : std::runtime_error {
    explicit arithmetic_error(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation of a rational function at a root of its denominator.
struct pole_error : std::runtime_error {
    explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

/// A parameter value excluded by the construction (degenerate Pochhammer, unsupported quotient).
struct parameter_error : std::runtime_error {
    explicit parameter_error(const std::string& what) : std::runtime_error(what) {}
};

/// A structural precondition failed (non-diagonalizable grading, missing basis, bad input).
struct structure_error : std::runtime_error {
    explicit structure_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual or JSON input.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace d21a
