#ifndef QSERIES_ERRORS_HPP
#define QSERIES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qseries
{

// Constant term of a series is not +1 or -1.
struct not_a_unit : std::domain_error {
    using std::domain_error::domain_error;
};

// Exponent requested beyond the truncation order of a series.
struct order_exceeded : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Negative exponent or otherwise malformed argument to a series operation.
struct invalid_exponent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A Lambert-type spec violates its invariants (nonpositive exponent, unbounded enumeration, ...).
struct spec_invalid : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct unknown_identity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct unknown_series : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace qseries

#endif
