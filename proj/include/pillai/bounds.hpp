#pragma once

#include "pillai/real.hpp"

#include <gmpxx.h>

namespace pillai {

/**
 * Parameter block for the analytic ceilings. alpha/beta are the 2-adic
 * invariants of the base triple, g the greatest odd divisor of gcd(x2,y2),
 * a0/b0/c0 uniform base lower bounds and Ma/Mb/Mc caps (0 = none set).
 *
 * m2 only matters at alpha = 2 and always has the shape log 8 / log t for
 * the smallest base t <= 7, or exactly 1 otherwise; storing the generator t
 * (m2_base, 0 meaning m2 = 1) keeps both precision tiers evaluating the same
 * symbolic constant instead of round-tripping through a decimal.
 */
struct BoundContext {
    unsigned long alpha = 2;
    unsigned long beta = 1;
    unsigned long m2_base = 0; // 0 => m2 = 1; else m2 = log 8 / log m2_base
    unsigned long g = 1;
    mpz_class a0 = 3, b0 = 3, c0 = 6;
    mpz_class Ma = 0, Mb = 0, Mc = 0;

    void validate() const; // throws domain errors on nonsense parameters
};

template <class R>
struct HParamsT {
    R c1, c2, c3;
    R m3 = 0, v_alpha = 0; // populated for alpha >= 3
};

// The (c1,c2,c3) constants of the 2-adic z-bound, by the alpha = 2 / >= 3 split.
template <class R>
HParamsT<R> h_params(const BoundContext& ctx);

// log max{x, e}
template <class R>
R log_star(R x);

// Root bound for t/log^2 t = v: every t > e^2 on that level set satisfies
// t < (1 + log log v0/(log v0 - 1))^2 * v * log^2(4v).
Real pdw_bound(Real v, Real v0);

// Bugeaud's 2-adic linear-forms bound:
//   nu_2(u1^{b1} - u2^{b2}) <= 36.1 g B^2 / ((log 2)^4 E^3) * H1 * H2
// with B = max{log(b1/H2 + b2/H1) + log(E log 2) + 0.4, 6 E log 2}.
Real bugeaud_nu2_bound(Real g, Real E, Real H1, Real H2, Real b1, Real b2);

// The bare max{c1, c2 log*^2(c3 log u)} factor; callers multiply by the log
// factors they need (log v log w for the full bound, log v alone for H(u;v)).
template <class R>
R h_factor_t(const BoundContext& ctx, const mpz_class& u);
Real h_factor(const BoundContext& ctx, const mpz_class& u);

// H_{alpha,beta,m2}(u; v,w) = max{c1, c2 log*^2(c3 log u)} * log v * log w
template <class R>
R h_bound_t(const BoundContext& ctx, const mpz_class& u, const mpz_class& v, const mpz_class& w);
Real h_bound(const BoundContext& ctx, const mpz_class& u, const mpz_class& v, const mpz_class& w);

// Largest z2 with  beta z2 - log z2/log 2 < alpha + log H(c)/log 2 - log g/log 2,
// scanned upward (0 if no z2 >= 1 qualifies). Both precision tiers must agree.
unsigned long u2_ceiling(const BoundContext& ctx, const mpz_class& c);

// Largest z1 satisfying the companion inequality with z2 := u2:
//   beta z1 - log(z1 u2)/log 2 < alpha + log(log^2 c/((log a) log b))/log 2 - log g/log 2.
unsigned long u1_ceiling(const BoundContext& ctx, const mpz_class& a, const mpz_class& b,
                         const mpz_class& c, unsigned long u2);

enum class U3Variant {
    U3,      // max{(1+eps) z1 + (1+eps)(log a/log c) dx + 1, 2523 log b}, eps = 999
    U3again, // max{1000 z2, 2523 log b}
};

Real u3_bound(unsigned long z1_or_z2, const mpz_class& a, const mpz_class& b, const mpz_class& c,
              unsigned long dx, U3Variant variant);

// Largest c with  c^{1/2} < max{H_{2,1,log8/log3}(c), H_{3,1}(c)}  (both H's at
// g=1, u=v=w=c). Found by doubling + bisection + local scan, tier-guarded.
mpz_class half_power_crossover();

// Largest base M with  M < z * H_{alpha,beta,m2}(M;M,M)... generalized scan:
// largest M with  M^{e_num/e_den} < mult * H_{alpha,beta,m2}(M;M,M), used for
// the base-cap scans (a < z1 H(a), b < z1^2 H(b)). mult folds in the z-factor.
mpz_class base_cap_crossover(const BoundContext& ctx, Real mult, unsigned e_num, unsigned e_den);

} // namespace pillai
