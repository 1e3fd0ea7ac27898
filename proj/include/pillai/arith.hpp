#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace pillai {

// p-adic valuation of A (sign ignored). A must be nonzero.
unsigned long vp(const mpz_class& p, const mpz_class& A);

/**
 * nu_2(s^n - sign) for odd s with |s| > 1, by the closed form:
 *
 *   nu_2(s^n - 1) = nu_2(s^2 - 1) - 1 + nu_2(n)   if s = 1 (mod 4) or n even
 *                 = 1                             if s = 3 (mod 4), n odd
 *   nu_2(s^n + 1) = nu_2(s + 1)                   if n odd
 *                 = 1                             if n even
 *
 * Residues of negative s are taken in the mathematical sense (-3 = 1 mod 4).
 */
unsigned long nu2_closed_form(const mpz_class& s, unsigned long n, int sign);

struct OrderData {
    unsigned long n = 0; // least n with r^n = +-1 (mod s)
    int delta = 0;       // the sign attained
    mpz_class f;         // (r^n - delta)/s, exact
};

// Least n >= 1 with r^n = +-1 (mod s), s > 2, gcd(r,s) = 1. Sequential scan;
// iter_cap = 0 means "s iterations" (the true order divides lambda(s) <= s).
OrderData order_data(const mpz_class& r, const mpz_class& s, unsigned long iter_cap = 0);

struct PowerWitness {
    mpz_class base;          // smallest base m with A = m^k
    unsigned long exponent;  // the matching k > 1
};

// A = m^k with m,k > 1? Exact k-th roots tried for every prime k <= log2 A.
std::optional<PowerWitness> is_perfect_power(const mpz_class& A);

// base^exponent mod modulus (modulus >= 1, exponent >= 0).
mpz_class mod_pow(const mpz_class& base, const mpz_class& exponent, const mpz_class& modulus);

// Convenience overload for machine-word exponents.
mpz_class mod_pow(const mpz_class& base, unsigned long exponent, const mpz_class& modulus);

// floor(A^(1/k)) for A >= 0, k >= 1, exact.
mpz_class iroot_floor(const mpz_class& A, unsigned long k);

// mpz_class from unsigned long long without narrowing through long.
mpz_class mpz_from_ull(unsigned long long v);

struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace pillai
