#pragma once

#include <stdexcept>
#include <string>

namespace pp {

// Invalid argument values (zero-norm quaternion, bad ranges, empty batch).
struct InvalidInputError : std::runtime_error {
    explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

// Tensor shape mismatches; message names both shapes.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

// Degenerate geometry (collinear pose points, singular Gram-Schmidt input).
struct SingularInputError : std::runtime_error {
    explicit SingularInputError(const std::string& what) : std::runtime_error(what) {}
};

// Bad run configuration; maps to CLI exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite values where finite ones are required; maps to CLI exit code 3.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// File I/O and format failures.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pp
