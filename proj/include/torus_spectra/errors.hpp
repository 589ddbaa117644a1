#pragma once

#include <stdexcept>
#include <string>

namespace torus_spectra {

// Domain errors carried by the library. Each maps to one named failure
// mode of an operation contract.
struct NotPositiveDefinite : std::domain_error {
    using std::domain_error::domain_error;
};

struct SampleTooLarge : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct OracleTooLarge : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct GapExceedsBound : std::domain_error {
    using std::domain_error::domain_error;
};

struct DegenerateInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateDenominator : std::domain_error {
    using std::domain_error::domain_error;
};

struct GuardExceeded : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct SingularDomain : std::domain_error {
    using std::domain_error::domain_error;
};

struct NoRootInBracket : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace torus_spectra
