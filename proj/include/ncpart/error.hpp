#pragma once

#include <stdexcept>
#include <string>

namespace ncpart {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text that does not match the block-list or sequence grammar.
class ParseError : public Error {
public:
    using Error::Error;
};

// Well-formed input that violates a structural condition (not a partition,
// crossing, not special, sequence condition broken, bound exceeded).
class ValidationError : public Error {
public:
    using Error::Error;
};

// An arc-stretching step whose local arc layout does not match the
// preconditions. Raised when a sequence entry exceeds its governing bound.
class StructureError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

}  // namespace ncpart
