#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace pillai {

/*
 * Two-tier float policy for every analytic bound in the project.
 *
 * Standard tier: long double (64-bit mantissa on x86-64). Wide tier: MPFR at
 * ~133 bits via boost::multiprecision, used to re-verify any integer decision
 * derived from float comparisons. A disagreement between tiers aborts the run
 * instead of silently picking a side; upper bounds additionally get a 1e-9
 * multiplicative slack so a true bound is never under-estimated.
 */
using Real = long double;
using Wide = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<40>,
                                           boost::multiprecision::et_off>;

inline constexpr long double kSlack = 1e-9L;

struct precision_disagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class R>
R real_from_mpz(const mpz_class& n);

template <>
inline Real real_from_mpz<Real>(const mpz_class& n) {
    signed long e2;
    double d = mpz_get_d_2exp(&e2, n.get_mpz_t()); // n = d * 2^e2, 0.5 <= |d| < 1
    return std::scalbn(static_cast<Real>(d), static_cast<int>(e2));
}

template <>
inline Wide real_from_mpz<Wide>(const mpz_class& n) {
    Wide w;
    mpfr_set_z(w.backend().data(), n.get_mpz_t(), MPFR_RNDN);
    return w;
}

// log of a positive big integer, at the requested tier
template <class R>
R log_mpz(const mpz_class& n) {
    if (n <= 0) throw std::invalid_argument("log_mpz: argument must be positive");
    if constexpr (std::is_same_v<R, Real>) {
        signed long e2;
        double d = mpz_get_d_2exp(&e2, n.get_mpz_t());
        return std::log(static_cast<Real>(d)) + static_cast<Real>(e2) * 0.693147180559945309417L;
    } else {
        using boost::multiprecision::log;
        return log(real_from_mpz<Wide>(n));
    }
}

// Slack application. widen for quantities used as upper bounds, narrow for
// lower bounds; keeps rounding error from ever rejecting a genuine candidate.
template <class R>
R widen(const R& v) {
    return v * (R(1) + R(kSlack));
}
template <class R>
R narrow(const R& v) {
    return v * (R(1) - R(kSlack));
}

/**
 * Run an integer-valued computation at both precision tiers and insist they
 * agree. f is a generic callable invoked as f(R{}) and must return an
 * equality-comparable value (integer or mpz_class).
 */
template <class F>
auto guarded(F&& f) {
    auto r1 = f(Real{});
    auto r2 = f(Wide{});
    if (!(r1 == r2))
        throw precision_disagreement(
            "precision tiers disagree on an integer decision; aborting per float policy");
    return r1;
}

} // namespace pillai
