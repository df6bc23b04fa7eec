#pragma once

#include <stdexcept>
#include <string>

namespace cvqe {

/// Basis-size mismatch or out-of-range Fock index.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// State does not fit in the truncated basis (lost mass above threshold).
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Broken caller-side precondition (non-pure target, unphysical covariance, ...).
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Conditioning on a (numerically) zero-probability outcome or empty window.
struct DegenerateOutcomeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Monte Carlo run kept no samples.
struct InsufficientStatisticsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cvqe
