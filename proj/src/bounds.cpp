#include "pillai/bounds.hpp"

#include "pillai/arith.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>

namespace pillai {

namespace {

// Decimal literal at the requested tier. Keeps the wide tier from inheriting
// the long-double rounding of constants like 1803.3.
template <class R>
R lit(const char* s) {
    if constexpr (std::is_same_v<R, Real>) {
        return strtold(s, nullptr);
    } else {
        return R(s);
    }
}

template <class R>
R rlog(R x) {
    using std::log;
    return log(x);
}

template <class R>
R ln2() {
    return rlog(R(2));
}

} // namespace

void BoundContext::validate() const {
    if (alpha < 2) throw domain_error("BoundContext: alpha must be >= 2");
    if (beta < 1) throw domain_error("BoundContext: beta must be >= 1");
    if (g < 1 || g % 2 == 0) throw domain_error("BoundContext: g must be odd and positive");
    if (m2_base == 1 || m2_base == 2 || m2_base > 7)
        throw domain_error("BoundContext: m2_base must be 0 (m2=1) or in {3,...,7}");
    if ((Ma != 0 && a0 > Ma) || (Mb != 0 && b0 > Mb) || (Mc != 0 && c0 > Mc))
        throw domain_error("BoundContext: lower bounds exceed caps");
}

template <class R>
HParamsT<R> h_params(const BoundContext& ctx) {
    ctx.validate();
    HParamsT<R> hp;
    R beta = R(ctx.beta);
    if (ctx.alpha == 2) {
        R m2 = ctx.m2_base == 0 ? R(1) : rlog(R(8)) / rlog(R(ctx.m2_base));
        hp.c1 = lit<R>("1803.3") * m2 / beta;
        hp.c2 = lit<R>("23.865") * m2 / beta;
        hp.c3 = lit<R>("143.75") * (m2 + 1) / beta;
    } else {
        R alpha = R(ctx.alpha);
        // m3 = log 2^alpha / log(2^alpha - 1); at alpha >= 64 the denominator
        // needs the big-int log path to stay exact.
        mpz_class pow2a;
        mpz_ui_pow_ui(pow2a.get_mpz_t(), 2, ctx.alpha);
        R m3 = alpha * ln2<R>() / log_mpz<R>(pow2a - 1);
        R va = 3 * alpha * ln2<R>() - rlog(3 * alpha * ln2<R>());
        hp.m3 = m3;
        hp.v_alpha = va;
        R vfac = 1 + rlog(va) / (va - 1);
        hp.c1 = lit<R>("2705") * m3 / (alpha * beta);
        hp.c2 = lit<R>("156.39") * m3 * vfac * vfac / (alpha * alpha * alpha * beta);
        hp.c3 = lit<R>("646.9") * (m3 + 1) / (alpha * alpha * beta);
    }
    return hp;
}

template HParamsT<Real> h_params<Real>(const BoundContext&);
template HParamsT<Wide> h_params<Wide>(const BoundContext&);

template <class R>
R log_star(R x) {
    using std::exp;
    if (x <= 0) throw domain_error("log_star: argument must be positive");
    R e = exp(R(1));
    if (x <= e) return R(1);
    return rlog(x);
}

template Real log_star<Real>(Real);
template Wide log_star<Wide>(Wide);

Real pdw_bound(Real v, Real v0) {
    Real e = std::exp(1.0L);
    if (!(v > e * e / 4)) throw domain_error("pdw_bound: need v > e^2/4");
    if (!(v0 > e && v0 < 2 * std::sqrt(v))) throw domain_error("pdw_bound: need e < v0 < 2 sqrt(v)");
    Real f = 1 + std::log(std::log(v0)) / (std::log(v0) - 1);
    Real l4v = std::log(4 * v);
    return f * f * v * l4v * l4v;
}

Real bugeaud_nu2_bound(Real g, Real E, Real H1, Real H2, Real b1, Real b2) {
    if (!(E > 2)) throw domain_error("bugeaud_nu2_bound: need E > 2");
    if (!(H1 > 0 && H2 > 0 && b1 >= 1 && b2 >= 1))
        throw domain_error("bugeaud_nu2_bound: bad H or multiplier");
    Real l2 = std::log(2.0L);
    Real B = std::max(std::log(b1 / H2 + b2 / H1) + std::log(E * l2) + 0.4L, 6 * E * l2);
    return 36.1L * g * B * B / (l2 * l2 * l2 * l2 * E * E * E) * H1 * H2;
}

template <class R>
R h_factor_t(const BoundContext& ctx, const mpz_class& u) {
    using std::max;
    HParamsT<R> hp = h_params<R>(ctx);
    R ls = log_star<R>(hp.c3 * log_mpz<R>(u));
    return max(hp.c1, hp.c2 * ls * ls);
}

template Real h_factor_t<Real>(const BoundContext&, const mpz_class&);
template Wide h_factor_t<Wide>(const BoundContext&, const mpz_class&);

Real h_factor(const BoundContext& ctx, const mpz_class& u) {
    return h_factor_t<Real>(ctx, u);
}

template <class R>
R h_bound_t(const BoundContext& ctx, const mpz_class& u, const mpz_class& v, const mpz_class& w) {
    if (u <= 1 || v <= 1 || w <= 1) throw domain_error("h_bound: arguments must exceed 1");
    return h_factor_t<R>(ctx, u) * log_mpz<R>(v) * log_mpz<R>(w);
}

template Real h_bound_t<Real>(const BoundContext&, const mpz_class&, const mpz_class&, const mpz_class&);
template Wide h_bound_t<Wide>(const BoundContext&, const mpz_class&, const mpz_class&, const mpz_class&);

Real h_bound(const BoundContext& ctx, const mpz_class& u, const mpz_class& v, const mpz_class& w) {
    return h_bound_t<Real>(ctx, u, v, w);
}

namespace {

/**
 * Shared scan for the U1/U2 ceilings: largest integer z with
 * beta z - log(z * zfac)/log 2 < rhs. The left side is eventually strictly
 * increasing (stationary point 1/(beta log 2)); three consecutive failures
 * past it terminate the scan.
 */
template <class R>
unsigned long ceiling_scan(unsigned long beta, R zfac_log, R rhs) {
    R l2 = ln2<R>();
    R stationary = 1 / (R(beta) * l2);
    unsigned long best = 0;
    int fails_past = 0;
    for (unsigned long z = 1;; ++z) {
        R lhs = R(beta) * R(z) - (rlog(R(z)) + zfac_log) / l2;
        if (lhs < rhs) {
            best = z;
            fails_past = 0;
        } else if (R(z) > stationary) {
            if (++fails_past >= 3) break;
        }
        if (z > 100000000ul) throw std::runtime_error("ceiling scan runaway");
    }
    return best;
}

} // namespace

unsigned long u2_ceiling(const BoundContext& ctx, const mpz_class& c) {
    ctx.validate();
    if (ctx.c0 != 0 && c < ctx.c0) throw domain_error("u2_ceiling: c below c0");
    return guarded([&](auto tag) -> unsigned long {
        using R = decltype(tag);
        R H = widen(h_bound_t<R>(ctx, c, c, c));
        R rhs = R(ctx.alpha) + rlog(H) / ln2<R>() - rlog(R(ctx.g)) / ln2<R>();
        return ceiling_scan<R>(ctx.beta, R(0), rhs);
    });
}

unsigned long u1_ceiling(const BoundContext& ctx, const mpz_class& a, const mpz_class& b,
                         const mpz_class& c, unsigned long u2) {
    ctx.validate();
    if (u2 < 1) throw domain_error("u1_ceiling: u2 must be >= 1");
    if (a <= 1 || b <= 1 || c <= 1) throw domain_error("u1_ceiling: bases must exceed 1");
    return guarded([&](auto tag) -> unsigned long {
        using R = decltype(tag);
        R lc = log_mpz<R>(c);
        R ratio = widen(lc * lc / (log_mpz<R>(a) * log_mpz<R>(b)));
        R rhs = R(ctx.alpha) + rlog(ratio) / ln2<R>() - rlog(R(ctx.g)) / ln2<R>();
        return ceiling_scan<R>(ctx.beta, rlog(R(u2)), rhs);
    });
}

Real u3_bound(unsigned long z1_or_z2, const mpz_class& a, const mpz_class& b, const mpz_class& c,
              unsigned long dx, U3Variant variant) {
    if (z1_or_z2 < 1 || b <= 1) throw domain_error("u3_bound: bad input");
    Real lb = log_mpz<Real>(b);
    if (variant == U3Variant::U3again) return std::max(1000.0L * z1_or_z2, 2523.0L * lb);
    if (a <= 1 || c <= 1) throw domain_error("u3_bound: bad input");
    constexpr Real eps = 999.0L;
    Real first = (1 + eps) * z1_or_z2 + (1 + eps) * log_mpz<Real>(a) / log_mpz<Real>(c) * dx + 1;
    return std::max(first, 2523.0L * lb);
}

namespace {

/**
 * Largest integer M >= lo satisfying a predicate that holds on an initial
 * segment (true up to some crossover, false after). Doubling finds a false
 * witness, bisection pins the boundary, and a short upward scan guards
 * against a non-strict transition near the kink of the max{} in H.
 */
mpz_class last_true(const mpz_class& lo, const std::function<bool(const mpz_class&)>& pred) {
    if (!pred(lo)) throw domain_error("crossover scan: predicate false at lower end");
    mpz_class lo2 = lo, hi = lo * 2;
    while (pred(hi)) {
        lo2 = hi;
        hi *= 2;
    }
    while (hi - lo2 > 1) {
        mpz_class mid = (lo2 + hi) / 2;
        if (pred(mid)) lo2 = mid;
        else hi = mid;
    }
    // the predicate is not formally monotone; make sure no stray true point
    // sits just past the reported boundary
    for (int k = 1; k <= 64; ++k) {
        if (pred(lo2 + k)) {
            lo2 = lo2 + k;
            k = 0;
        }
    }
    return lo2;
}

} // namespace

mpz_class half_power_crossover() {
    BoundContext two;
    two.alpha = 2;
    two.beta = 1;
    two.m2_base = 3;
    BoundContext three;
    three.alpha = 3;
    three.beta = 1;

    auto pred = [&](const mpz_class& c) -> bool {
        return guarded([&](auto tag) -> int {
            using R = decltype(tag);
            using std::max;
            R h = max(h_bound_t<R>(two, c, c, c), h_bound_t<R>(three, c, c, c));
            // compare in logs: (1/2) log c < log (widened h)
            return log_mpz<R>(c) / 2 < rlog(widen(h)) ? 1 : 0;
        }) != 0;
    };
    return last_true(16, pred);
}

mpz_class base_cap_crossover(const BoundContext& ctx, Real mult, unsigned e_num, unsigned e_den) {
    ctx.validate();
    if (mult <= 0 || e_num == 0 || e_den == 0) throw domain_error("base_cap_crossover: bad input");
    auto pred = [&](const mpz_class& m) -> bool {
        return guarded([&](auto tag) -> int {
            using R = decltype(tag);
            R h = h_bound_t<R>(ctx, m, m, m);
            R lhs = log_mpz<R>(m) * R(e_num) / R(e_den);
            return lhs < rlog(widen(R(mult) * h)) ? 1 : 0;
        }) != 0;
    };
    return last_true(16, pred);
}

} // namespace pillai
