#pragma once

#include <stdexcept>
#include <string>

namespace schurlab {

/// Two operands live in rings with different variable counts.
struct ArityMismatch : std::invalid_argument {
    explicit ArityMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// exact_div found no quotient in the Laurent ring. In this library that
/// usually signals a transcribed formula is wrong, not bad user input.
struct NotDivisible : std::domain_error {
    explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

/// A series truncation was asked to grade a variable that occurs with a
/// negative exponent.
struct NegativeExponentInGrading : std::domain_error {
    explicit NegativeExponentInGrading(const std::string& what) : std::domain_error(what) {}
};

struct NonSquareMatrix : std::invalid_argument {
    explicit NonSquareMatrix(const std::string& what) : std::invalid_argument(what) {}
};

/// A value that must clear its rational prefactor to integer coefficients
/// failed to do so.
struct NonIntegerResult : std::domain_error {
    explicit NonIntegerResult(const std::string& what) : std::domain_error(what) {}
};

/// Partition lengths do not satisfy the contract of the called operation.
struct LengthMismatch : std::invalid_argument {
    explicit LengthMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct UnsupportedArity : std::invalid_argument {
    explicit UnsupportedArity(const std::string& what) : std::invalid_argument(what) {}
};

struct UnsupportedConfiguration : std::invalid_argument {
    explicit UnsupportedConfiguration(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownSuite : std::invalid_argument {
    explicit UnknownSuite(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace schurlab
