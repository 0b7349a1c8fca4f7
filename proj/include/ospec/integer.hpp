#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ospec {

// Arbitrary-precision integer. Everything the library computes with is exact.
using Int = mpz_class;
using Rational = mpq_class;

// Input that violates a documented precondition (bad modulus, group out of
// a lemma's scope, ...). CLI maps this to exit code 2.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a computation exceeds its configured effort budget
// (factoring iterations, enumeration size). CLI maps this to exit code 3.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FactorBudgetError : BudgetError {
    using BudgetError::BudgetError;
};

struct EnumerationLimitError : BudgetError {
    using BudgetError::BudgetError;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Int pow_int(unsigned long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline bool fits_u64(const Int& n) {
    return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Int& n) {
    if (!fits_u64(n))
        throw std::overflow_error("integer does not fit in 64 bits: " + n.get_str());
    return static_cast<std::uint64_t>(mpz_get_ui(n.get_mpz_t()));
}

}  // namespace ospec
