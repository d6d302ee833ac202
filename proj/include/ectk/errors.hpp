#pragma once

#include <stdexcept>
#include <string>

namespace ectk {

// Precondition violation: argument outside the operation's domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// gcd(a, m) != 1, or a control law has no inverse for the given shape.
struct NotInvertibleError : DomainError {
    using DomainError::DomainError;
};

// Malformed ciphertext or serialized blob.
struct DecodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fixed-point value outside the encoder's representable range.
struct EncodingRangeError : DomainError {
    using DomainError::DomainError;
};

// Stacked regressor matrix is rank deficient.
struct RankDeficientError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Oracle query past the configured budget.
struct BudgetExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ectk
