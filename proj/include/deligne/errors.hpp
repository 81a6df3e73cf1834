#ifndef DELIGNE_ERRORS_HPP
#define DELIGNE_ERRORS_HPP

#include <stdexcept>

namespace deligne {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user-supplied argument (unparsable input, non-dominant weight, ...).
struct DomainError : Error {
    using Error::Error;
};

// |lambda| != |mu| (or != |rho|) where equal sizes are required.
struct SizeMismatch : Error {
    using Error::Error;
};

// Binary series operation on operands with different truncation orders.
struct TruncationMismatch : Error {
    using Error::Error;
};

// Series inverse requested for a series with zero constant term.
struct NonInvertible : Error {
    using Error::Error;
};

// Polynomial is not integer-valued (binomial-basis conversion failed).
struct NotIntegerValued : Error {
    using Error::Error;
};

// Over-determined interpolation samples do not lie on one polynomial.
struct InconsistentSamples : Error {
    using Error::Error;
};

// A formula that must cancel to a polynomial left a denominator behind.
// Signals an implementation bug, never user error.
struct InternalDenominator : Error {
    using Error::Error;
};

// Diagram composition with mismatched source/target objects.
struct BoundaryMismatch : Error {
    using Error::Error;
};

// Finite-rank series never agreed with its stable limit within the rank cap.
struct NoStabilization : Error {
    using Error::Error;
};

} // namespace deligne

#endif
