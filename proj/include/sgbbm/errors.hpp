#pragma once
#include <stdexcept>
#include <string>

namespace sgbbm {

// Bad user input: malformed config, mismatched meshes, out-of-range parameters.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// Internal invariant broken: e.g. a factorization of a matrix that must be SPD
// hit a nonpositive pivot, or a drift evaluation produced a non-finite value.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sgbbm
