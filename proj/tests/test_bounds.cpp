#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pillai/bounds.hpp"

#include <cmath>
#include <random>

using namespace pillai;

static BoundContext ctx_of(unsigned long alpha, unsigned long beta, unsigned long m2_base,
                           unsigned long g = 1) {
    BoundContext c;
    c.alpha = alpha;
    c.beta = beta;
    c.m2_base = m2_base;
    c.g = g;
    c.c0 = 2;
    return c;
}

TEST_CASE("log_star clamps at e") {
    CHECK(log_star<Real>(1.0L) == doctest::Approx(1.0));
    CHECK(log_star<Real>(std::exp(1.0L)) == doctest::Approx(1.0));
    CHECK(log_star<Real>(std::exp(2.0L)) == doctest::Approx(2.0));
    CHECK_THROWS(log_star<Real>(-1.0L));
}

// Bisection oracle for the root of t/log^2 t = v on t > e^2, where the map is
// strictly increasing. Written against the dominance claim of pdw_bound.
static long double root_of_tlog2(long double v) {
    long double lo = std::exp(2.0L) + 1e-6L, hi = lo;
    auto f = [](long double t) { return t / (std::log(t) * std::log(t)); };
    while (f(hi) < v) hi *= 2;
    for (int i = 0; i < 200; ++i) {
        long double mid = (lo + hi) / 2;
        (f(mid) < v ? lo : hi) = mid;
    }
    return hi;
}

TEST_CASE("pdw_bound fixture and dominance") {
    CHECK(static_cast<double>(pdw_bound(10.0L, 3.0L)) == doctest::Approx(519.410215).epsilon(1e-6));
    long double root = root_of_tlog2(10.0L);
    CHECK(static_cast<double>(root) == doctest::Approx(339.643927).epsilon(1e-6));
    CHECK(root < pdw_bound(10.0L, 3.0L));

    // leading factor exceeds 1, so result > v log^2(4v)
    long double v = 100.0L;
    CHECK(pdw_bound(v, 10.0L) > v * std::log(4 * v) * std::log(4 * v));

    CHECK_THROWS(pdw_bound(1.0L, 3.0L));       // v too small
    CHECK_THROWS(pdw_bound(10.0L, 1000.0L));   // v0 >= 2 sqrt(v)
}

TEST_CASE("pdw_bound dominates the true root for 100 random v") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> expd(0.30, 9.0); // v = 10^u spans (2, 1e9)
    for (int i = 0; i < 100; ++i) {
        long double v = std::pow(10.0L, (long double)expd(rng));
        long double v0 = std::min(3.0L, (std::exp(1.0L) + 2 * std::sqrt(v)) / 2);
        long double root = root_of_tlog2(v);
        CHECK(root < pdw_bound(v, v0));
    }
}

TEST_CASE("bugeaud_nu2_bound fixture and branches") {
    Real l11 = std::log(11.0L);
    Real r = bugeaud_nu2_bound(2, 3, l11, l11, 1, 1);
    CHECK(static_cast<double>(r) == doctest::Approx(10368.7868).epsilon(1e-6));

    // huge b1 forces the logarithmic branch of B
    Real rbig = bugeaud_nu2_bound(2, 3, l11, l11, 1e9L, 1);
    Real l2 = std::log(2.0L);
    Real Blog = std::log(1e9L / l11 + 1 / l11) + std::log(3 * l2) + 0.4L;
    CHECK(Blog > 6 * 3 * l2);
    CHECK(static_cast<double>(rbig) ==
          doctest::Approx(static_cast<double>(36.1L * 2 * Blog * Blog / (l2 * l2 * l2 * l2 * 27) * l11 * l11)));

    CHECK(bugeaud_nu2_bound(2, 3, 2 * l11, l11, 1, 1) > r); // monotone in H1
    CHECK_THROWS(bugeaud_nu2_bound(2, 2, l11, l11, 1, 1));  // E too small
}

TEST_CASE("h_params constants") {
    // alpha=3, beta=1: c1 = 2705 * (log 8/log 7) / 3
    auto hp = h_params<Real>(ctx_of(3, 1, 0));
    CHECK(static_cast<double>(hp.c1) == doctest::Approx(963.5404411).epsilon(1e-9));
    CHECK(static_cast<double>(hp.m3) == doctest::Approx(std::log(8.0) / std::log(7.0)));

    // alpha=2 uses m2
    auto hp2 = h_params<Real>(ctx_of(2, 1, 3));
    Real m2 = std::log(8.0L) / std::log(3.0L);
    CHECK(static_cast<double>(hp2.c1) == doctest::Approx(static_cast<double>(1803.3L * m2)));
    CHECK(static_cast<double>(hp2.c3) == doctest::Approx(static_cast<double>(143.75L * (m2 + 1))));

    // beta divides everything
    auto hp3 = h_params<Real>(ctx_of(3, 2, 0));
    CHECK(static_cast<double>(hp3.c1) == doctest::Approx(static_cast<double>(hp.c1 / 2)));
}

TEST_CASE("h_params c1,c2,c3 nonincreasing in alpha (>=3) and beta") {
    for (unsigned long alpha = 3; alpha < 60; ++alpha) {
        auto lo = h_params<Real>(ctx_of(alpha, 1, 0));
        auto hi = h_params<Real>(ctx_of(alpha + 1, 1, 0));
        CHECK(hi.c1 <= lo.c1);
        CHECK(hi.c2 <= lo.c2);
        CHECK(hi.c3 <= lo.c3);
    }
}

TEST_CASE("h_bound monotonicity") {
    auto c = ctx_of(2, 1, 3);
    mpz_class u("1000000");
    CHECK(h_bound(c, u, u, u) <= h_bound(c, u * 10, u, u));
    CHECK(h_bound(c, u, u, u) <= h_bound(c, u, u * 10, u));
    CHECK(h_bound(c, u, u, u) <= h_bound(c, u, u, u * 10));
    for (unsigned long alpha = 3; alpha < 30; ++alpha)
        CHECK(h_bound(ctx_of(alpha + 1, 1, 0), u, u, u) <= h_bound(ctx_of(alpha, 1, 0), u, u, u));
}

TEST_CASE("u2_ceiling sweep reproduces the z2 <= 230 bound") {
    // alpha tops out at 205: the base premise 2^alpha - 1 <= min{a,b} <= 1e62
    // caps alpha below log2(1e62) = 205.96
    mpz_class c62;
    mpz_ui_pow_ui(c62.get_mpz_t(), 10, 62);
    unsigned long best = 0, best_alpha = 0;
    for (unsigned long alpha = 2; alpha <= 205; ++alpha) {
        unsigned long u2 = u2_ceiling(ctx_of(alpha, 1, 3), c62);
        if (u2 > best) {
            best = u2;
            best_alpha = alpha;
        }
    }
    CHECK(best == 230);
    CHECK(best_alpha == 205);

    // derived exponent bound: min-base 2^alpha - 1 gives max{x,y} < 4300
    Real worst = 0;
    for (unsigned long alpha = 2; alpha <= 205; ++alpha) {
        unsigned long u2 = u2_ceiling(ctx_of(alpha, 1, 3), c62);
        mpz_class minbase;
        mpz_ui_pow_ui(minbase.get_mpz_t(), 2, alpha);
        minbase -= 1;
        Real xmax = log_mpz<Real>(c62) * u2 / log_mpz<Real>(minbase);
        worst = std::max(worst, xmax);
    }
    CHECK(worst < 4300.0L);
}

TEST_CASE("u2_ceiling monotone in g and beta") {
    mpz_class c("1000000007");
    auto base = ctx_of(2, 1, 3);
    CHECK(u2_ceiling(ctx_of(2, 1, 3, 3), c) <= u2_ceiling(base, c));
    CHECK(u2_ceiling(ctx_of(2, 2, 3), c) <= u2_ceiling(base, c));
}

TEST_CASE("u1_ceiling terminates and bounds the (3,5,2) z1") {
    auto c = ctx_of(2, 1, 3);
    unsigned long u2 = u2_ceiling(c, 2);
    CHECK(u2 >= 1);
    unsigned long u1 = u1_ceiling(c, 3, 5, 2, u2);
    CHECK(u1 >= 3); // the actual third solution has z1 = 3 among z's {3,5,7}
    CHECK(u1 < 100);
}

TEST_CASE("u3_bound variants") {
    CHECK(static_cast<double>(u3_bound(5, 2, 3, 2, 0, U3Variant::U3again)) == doctest::Approx(5000.0));
    mpz_class b6("1000000");
    CHECK(static_cast<double>(u3_bound(1, 2, b6, 2, 0, U3Variant::U3again)) ==
          doctest::Approx(2523.0 * std::log(1e6)));
    CHECK(u3_bound(7, 2, 3, 2, 0, U3Variant::U3again) >= 7000.0L);
    // eps = 999 variant: first argument dominates for small b
    Real v = u3_bound(3, 13, 3, 2200, 2, U3Variant::U3);
    Real expect = 1000.0L * 3 + 1000.0L * std::log(13.0L) / std::log(2200.0L) * 2 + 1;
    CHECK(static_cast<double>(v) == doctest::Approx(static_cast<double>(std::max(expect, 2523.0L * std::log(3.0L)))));
}

TEST_CASE("half-power crossover sits in the stated bracket") {
    mpz_class c = half_power_crossover();
    CHECK(c >= mpz_class("1000000000000"));    // 1e12
    CHECK(c <= mpz_class("14000000000000"));   // 1.4e13
    // crossing is genuine: predicate flips right past the reported value
    BoundContext two = ctx_of(2, 1, 3), three = ctx_of(3, 1, 0);
    auto big = c + 1;
    Real lhs = log_mpz<Real>(big) / 2;
    Real rhs = std::log(std::max(h_bound(two, big, big, big), h_bound(three, big, big, big)));
    CHECK(lhs >= rhs * (1 - 1e-7L));
}

TEST_CASE("all bound evaluations finite and positive over the parameter grid") {
    mpz_class u("1000003");
    for (unsigned long alpha : {2ul, 3ul, 5ul, 17ul, 22ul, 206ul})
        for (unsigned long beta : {1ul, 2ul, 10ul})
            for (unsigned long m2b : {0ul, 3ul, 5ul, 7ul}) {
                auto c = ctx_of(alpha, beta, m2b);
                Real h = h_bound(c, u, u, u);
                CHECK(std::isfinite(static_cast<double>(h)));
                CHECK(h > 0);
                CHECK(u2_ceiling(c, u) >= 1);
            }
}
