#ifndef SEPQ_ERRORS_HPP
#define SEPQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sepq
{

// Division by a series (or scalar) that vanishes on its whole known window.
struct ZeroDivision : std::domain_error {
    using std::domain_error::domain_error;
};

// A coefficient was requested at or above the truncation order.
struct OutOfPrecision : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// A Pochhammer product contains an identically vanishing factor.
struct ZeroFactor : std::domain_error {
    using std::domain_error::domain_error;
};

// A summation whose valuation bound never reached the truncation order.
struct NonConvergent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters outside the formally convergent region of a transformation.
struct PreconditionViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownIdentity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace sepq

#endif
