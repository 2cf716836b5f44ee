#pragma once

#include <stdexcept>
#include <string>

namespace kh {

// Base of every error raised by the library. Each subclass corresponds to one
// failure mode a caller can act on; messages always name the offending value.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A quotient that was required to be exact left a remainder. The remainder is
// kept in printed form so that the error type does not depend on Polynomial.
class NonExactDivision : public Error {
public:
    NonExactDivision(const std::string& what, std::string remainder)
        : Error(what + " (remainder " + remainder + ")"), remainder_(std::move(remainder)) {}
    const std::string& remainder() const noexcept { return remainder_; }

private:
    std::string remainder_;
};

class ParameterSingularity : public Error {
public:
    using Error::Error;
};

class ContextInvalid : public Error {
public:
    ContextInvalid(std::string constraint, const std::string& detail)
        : Error(constraint + ": " + detail), constraint_(std::move(constraint)) {}
    const std::string& constraint() const noexcept { return constraint_; }

private:
    std::string constraint_;
};

class NotThetaRepresentable : public Error {
public:
    using Error::Error;
};

class ZeroOperator : public Error {
public:
    ZeroOperator() : Error("genre of the zero operator is undefined") {}
};

class DegenerateMoments : public Error {
public:
    explicit DegenerateMoments(int index)
        : Error("vanishing norm at index " + std::to_string(index)), index_(index) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

class ResonantParameters : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace kh
