#pragma once

#include <stdexcept>
#include <string>

namespace ybsl21 {

/// Base of every library error; the CLI maps it to exit code 3 unless a
/// more specific mapping applies.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A terminating exponential did not vanish within its iteration budget.
class NonTerminatingExp : public Error {
public:
    using Error::Error;
};

/// A graded operation needed a definite parity and the operand had none.
class IndefiniteParity : public Error {
public:
    using Error::Error;
};

/// Parameters hit a pole or a degenerate value of some construction.
class SingularParameters : public Error {
public:
    using Error::Error;
};

/// Closed-form Verma vectors are undefined at this weight.
class SingularWeight : public Error {
public:
    using Error::Error;
};

/// An R-operator did not send 1 to a nonzero multiple of 1.
class NormalizationFailure : public Error {
public:
    using Error::Error;
};

/// A polynomial expected in a span is not in it.
class NotInSpan : public Error {
public:
    NotInSpan(const std::string& what, std::string residual)
        : Error(what + "; residual: " + residual), residual_(std::move(residual)) {}
    [[nodiscard]] const std::string& residual() const { return residual_; }

private:
    std::string residual_;
};

}  // namespace ybsl21
