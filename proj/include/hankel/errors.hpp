#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hankel {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract arguments (non-finite data, shape mismatch, ...).
struct InvalidInput : Error {
    using Error::Error;
};

// Linear system whose pivot fell below the singularity threshold.
struct SingularSystem : Error {
    using Error::Error;
};

// A symmetric tensor that violates the constant-on-equal-index-sums property;
// carries one offending pair of multi-indices.
struct HankelViolation : Error {
    std::vector<int> index_a;
    std::vector<int> index_b;
    HankelViolation(const std::string& msg, std::vector<int> a, std::vector<int> b)
        : Error(msg), index_a(std::move(a)), index_b(std::move(b)) {}
};

// Associated Hankel matrix requested without the extra trailing entry it needs.
struct MissingTail : Error {
    using Error::Error;
};

// Operation undefined for the given order/dimension combination.
struct UnsupportedShape : Error {
    using Error::Error;
};

// Vandermonde system too ill-conditioned to certify in double precision.
struct ConditioningError : Error {
    using Error::Error;
};

}  // namespace hankel
