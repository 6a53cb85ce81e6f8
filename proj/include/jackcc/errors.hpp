#pragma once

#include <stdexcept>
#include <string>

namespace jackcc {

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotPolynomial : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleAtPoint : std::domain_error {
    using std::domain_error::domain_error;
};

struct MissingPart : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidPartition : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegreeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegreeTooLarge : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/* Raised when the constrained eigenspace is not a line; never a legal input. */
struct DegenerateSystem : std::logic_error {
    using std::logic_error::logic_error;
};

struct AdjacentPair : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotGoodMatching : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownSuite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedFormat : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace jackcc
