#pragma once

#include <stdexcept>
#include <string>

namespace abcframe {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ContextMismatch : public Error { using Error::Error; };
class PrecisionExhausted : public Error { using Error::Error; };
class NonPositiveModulus : public Error { using Error::Error; };
class NotOnLattice : public Error { using Error::Error; };
class UnsupportedDivision : public Error { using Error::Error; };
class NotRepresentable : public Error { using Error::Error; };
class NonPositiveInput : public Error { using Error::Error; };
class PeriodMismatch : public Error { using Error::Error; };
class RegionUnsupported : public Error { using Error::Error; };
class IterationCapExceeded : public Error { using Error::Error; };
class EmptySet : public Error { using Error::Error; };
class OracleInconsistency : public Error { using Error::Error; };
class BadTruncation : public Error { using Error::Error; };
class UnsupportedRange : public Error { using Error::Error; };

// Raised when a structural identity that the construction guarantees fails.
class InvariantViolation : public Error { using Error::Error; };

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t column)
        : Error(what + " at column " + std::to_string(column)), column_(column) {}
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

}  // namespace abcframe
