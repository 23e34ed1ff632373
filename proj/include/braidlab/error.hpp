#pragma once

#include <stdexcept>
#include <string>

namespace braidlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// A configurable search or size cap was hit.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// Something the theory guarantees did not hold; always a bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class OutOfScope : public Error {
public:
    using Error::Error;
};

}  // namespace braidlab
