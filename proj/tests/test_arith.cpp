#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pillai/arith.hpp"

#include <random>

using namespace pillai;

// Reference valuation by repeated division; the oracle the closed form is
// judged against.
static unsigned long vp_naive(unsigned long p, mpz_class A) {
    REQUIRE(A != 0);
    if (A < 0) A = -A;
    unsigned long k = 0;
    while (A % p == 0) {
        A /= p;
        ++k;
    }
    return k;
}

TEST_CASE("vp fixtures") {
    CHECK(vp(2, 48) == 4);
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), 7, 4);
    CHECK(vp(2, t - 1) == 5); // 2400 = 2^5 * 75
    CHECK(vp(3, -27) == 3);   // sign ignored
    CHECK(vp(5, 7) == 0);
    CHECK_THROWS_AS(vp(2, 0), domain_error);
}

TEST_CASE("vp agrees with repeated division on random input") {
    std::mt19937_64 rng(0x9e3779b9);
    std::uniform_int_distribution<long> d(-1000000, 1000000);
    for (int i = 0; i < 2000; ++i) {
        long v = d(rng);
        if (v == 0) continue;
        CHECK(vp(2, v) == vp_naive(2, v));
        CHECK(vp(3, v) == vp_naive(3, v));
    }
}

TEST_CASE("nu2 closed form fixtures") {
    CHECK(nu2_closed_form(5, 3, +1) == 2);  // nu2(124) = 2
    CHECK(nu2_closed_form(7, 4, +1) == 5);  // nu2(2400) = 5
    CHECK(nu2_closed_form(3, 5, -1) == 2);  // nu2(244) = 2 = nu2(3+1)
    CHECK(nu2_closed_form(3, 1, +1) == 1);  // 3 = 3 (mod 4), n odd
    CHECK(nu2_closed_form(-3, 1, +1) == 2); // -3 = 1 (mod 4): nu2(9-1)-1+0
    CHECK_THROWS_AS(nu2_closed_form(4, 2, +1), domain_error);
    CHECK_THROWS_AS(nu2_closed_form(1, 2, +1), domain_error);
}

TEST_CASE("nu2 closed form vs direct valuation, 10^4 random instances") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> sd(3, 1000000);
    std::uniform_int_distribution<unsigned long> nd(1, 64);
    std::bernoulli_distribution flip(0.5);
    for (int i = 0; i < 10000; ++i) {
        long s = sd(rng) | 1; // force odd; stays within [3, 1000001]
        if (flip(rng)) s = -s;
        unsigned long n = nd(rng);
        int sign = flip(rng) ? +1 : -1;
        mpz_class sn;
        mpz_class base(s);
        mpz_pow_ui(sn.get_mpz_t(), base.get_mpz_t(), n);
        mpz_class target = sn - sign;
        // s^n - sign can vanish only for |s| = 1, excluded by construction
        CHECK(nu2_closed_form(s, n, sign) == vp(2, target));
    }
}

TEST_CASE("order_data fixtures") {
    OrderData d = order_data(3, 8);
    CHECK(d.n == 2);
    CHECK(d.delta == 1);
    CHECK(d.f == 1);

    d = order_data(2, 9);
    CHECK(d.n == 3);
    CHECK(d.delta == -1);
    CHECK(d.f == 1);

    d = order_data(3, 16);
    CHECK(d.n == 4);
    CHECK(d.delta == 1);
    CHECK(d.f == 5);

    CHECK_THROWS_AS(order_data(3, 9), domain_error);  // not coprime
    CHECK_THROWS_AS(order_data(3, 2), domain_error);  // modulus too small
}

TEST_CASE("order_data minimality and cofactor exactness") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<unsigned long> rd(2, 500), sd(3, 400);
    int tested = 0;
    while (tested < 200) {
        mpz_class r = rd(rng), s = sd(rng);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
        if (g != 1) continue;
        ++tested;
        OrderData d = order_data(r, s);
        mpz_class rn;
        mpz_pow_ui(rn.get_mpz_t(), r.get_mpz_t(), d.n);
        CHECK(s * d.f + d.delta == rn);
        // no smaller exponent reaches +-1
        mpz_class acc = 1;
        for (unsigned long k = 1; k < d.n; ++k) {
            acc = (acc * r) % s;
            CHECK(acc != 1);
            CHECK(acc != s - 1);
        }
    }
}

TEST_CASE("is_perfect_power fixtures") {
    auto w = is_perfect_power(8);
    REQUIRE(w.has_value());
    CHECK(w->base == 2);
    CHECK(w->exponent == 3);

    CHECK_FALSE(is_perfect_power(35).has_value());
    CHECK_FALSE(is_perfect_power(2200).has_value());

    w = is_perfect_power(64); // 2^6, smallest base wins over 8^2 and 4^3
    REQUIRE(w.has_value());
    CHECK(w->base == 2);
    CHECK(w->exponent == 6);

    w = is_perfect_power(225); // 15^2
    REQUIRE(w.has_value());
    CHECK(w->base == 15);
    CHECK(w->exponent == 2);
}

TEST_CASE("is_perfect_power on constructed powers") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<unsigned long> md(2, 50), kd(2, 9);
    for (int i = 0; i < 200; ++i) {
        unsigned long m = md(rng), k = kd(rng);
        mpz_class A;
        mpz_ui_pow_ui(A.get_mpz_t(), m, k);
        auto w = is_perfect_power(A);
        REQUIRE(w.has_value());
        mpz_class back;
        mpz_pow_ui(back.get_mpz_t(), w->base.get_mpz_t(), w->exponent);
        CHECK(back == A);
        CHECK_FALSE(is_perfect_power(w->base).has_value()); // base is minimal
    }
}

TEST_CASE("mod_pow fixtures") {
    CHECK(mod_pow(3, 7ul, 2200) == 2187);
    CHECK(mod_pow(13, 3ul, 2200) == 2197);
    CHECK(mod_pow(5, 100ul, 7) == 2);
    CHECK(mod_pow(3, 0ul, 10) == 1);
    CHECK_THROWS_AS(mod_pow(3, 4ul, 0), domain_error);
}

TEST_CASE("mod_pow vs naive repeated multiplication") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<unsigned long> bd(0, 10000), ed(0, 20), md(1, 9999);
    for (int i = 0; i < 500; ++i) {
        mpz_class b = bd(rng), m = md(rng);
        unsigned long e = ed(rng);
        mpz_class naive = 1;
        for (unsigned long j = 0; j < e; ++j) naive = (naive * b) % m;
        CHECK(mod_pow(b, e, m) == naive);
        CHECK(mod_pow(b, mpz_class(e), m) == naive);
    }
}

TEST_CASE("iroot_floor exactness") {
    CHECK(iroot_floor(2200, 3) == 13);   // 13^3 = 2197 <= 2200 < 14^3
    CHECK(iroot_floor(2197, 3) == 13);
    CHECK(iroot_floor(0, 5) == 0);
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 40);
    CHECK(iroot_floor(big, 4) == mpz_class("10000000000"));
}
