#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ospec/integer.hpp"

namespace ospec {

// Complete prime factorization of a positive integer.
// entries are (prime, exponent) with primes strictly increasing and
// exponents >= 1; the empty list represents 1.
struct Factorization {
    std::vector<std::pair<Int, unsigned>> entries;

    Int value() const;
    bool is_one() const { return entries.empty(); }
    unsigned valuation(const Int& p) const;
    std::vector<Int> primes() const;

    // 2-part split: (a, odd) with represented value == 2^a * odd.value()
    std::pair<unsigned, Factorization> split_two_part() const;

    bool operator==(const Factorization&) const = default;
};

Factorization fac_of_prime_power(const Int& p, unsigned e);
Factorization fac_mul(const Factorization& a, const Factorization& b);
Factorization fac_lcm(const Factorization& a, const Factorization& b);
// Exact quotient; throws std::logic_error if b does not divide a.
Factorization fac_div(const Factorization& a, const Factorization& b);

// Primality. Deterministic for n < 2^64 (Miller-Rabin with a proven witness
// set); Baillie-PSW-based beyond that, exact for every input this suite
// produces.
bool is_prime(const Int& n);

// Complete factorization of n >= 1: trial division up to a fixed bound, then
// deterministic Brent-rho splitting under an iteration budget. Results for
// large inputs are memoized in the process-wide persistent cache. Throws
// FactorBudgetError if a cofactor resists splitting within the budget.
Factorization factor(const Int& n);

void set_factor_budget(std::uint64_t max_rho_iterations);
std::uint64_t factor_budget();

// Multiplicative order of n modulo an odd prime r. For r = 2 the two-valued
// convention applies: 1 if n = 1 (mod 4), else 2 (n must be odd).
// n may be negative; it is reduced modulo r first.
Int mult_order(const Int& r, const Int& n);

// Least d >= 1 with n^d = 1 modulo r^e (modulus must be a power of an odd
// prime, n coprime to it).
Int mult_order_prime_power(const Int& modulus, const Int& n);

// Primes r with mult_order(r, a) == i, i.e. the primitive prime divisors of
// a^i - 1. Requires |a| > 1. Sorted ascending. Empty exactly on the classical
// exception pairs (2,1), (2,6), (-2,2), (-2,3), (3,1), (-3,2).
std::vector<Int> zsigmondy_set(const Int& a, unsigned i);

// Smallest member of zsigmondy_set(a, i), or nullopt if the set is empty.
// Fixing the smallest keeps every downstream construction deterministic.
std::optional<Int> smallest_primitive_divisor(const Int& a, unsigned i);

// Product of the primitive prime divisors of a^i - 1 with the multiplicity
// they carry in a^i - 1 (the primitive part). For i = 2 this is defined as
// the primitive part of -a - 1 (i = 1 at base -a). Empty product = 1; in
// particular 1 on the exception pairs, where no primitive divisor exists.
Int primitive_part(const Int& a, unsigned i);

// k if k is odd, k/2 if k is even.
unsigned long eta(unsigned long k);
Int eta(const Int& k);

enum class ClassicalFamily { linear, unitary, symplectic };

// Unified order function of a prime r relative to a classical group over a
// field of order q: mult_order(r, q) for linear, mult_order(r, -q) for
// unitary, eta(mult_order(r, q)) for symplectic. r must not divide q.
Int varphi(const Int& r, ClassicalFamily family, const Int& q);

}  // namespace ospec
