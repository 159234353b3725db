#pragma once

#include <stdexcept>
#include <string>

namespace elastoshock {

/// Bad argument to an operation (non-positive parameter, non-unit vector, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Density outside the declared domain of an equation of state.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// c^2 = dp/drho came out non-positive: the symmetric system is not hyperbolic there.
struct HyperbolicityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The jump relations admit no real downstream normal velocity.
struct NoPhysicalShockError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation that requires a Lax shock received a non-Lax one.
struct AdmissibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The boundary symbol dropped rank at a frequency sample.
struct DegenerateFrequencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A guaranteed property failed numerically (e.g. no admissible dispersion root,
/// or a Lopatinski zero in the open half-plane). Signals a bug, not a data case.
struct InternalConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace elastoshock
