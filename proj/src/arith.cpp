#include "pillai/arith.hpp"

#include <cassert>

namespace pillai {

unsigned long vp(const mpz_class& p, const mpz_class& A) {
    if (A == 0) throw domain_error("vp: valuation of 0 is infinite");
    assert(p > 1 && "vp expects a prime modulus");
    mpz_class rest;
    // mpz_remove strips every factor of p and reports how many it removed.
    mp_bitcnt_t k = mpz_remove(rest.get_mpz_t(), A.get_mpz_t(), p.get_mpz_t());
    return static_cast<unsigned long>(k);
}

namespace {

// s mod m with the representative in [0, m), also for negative s.
unsigned long math_mod(const mpz_class& s, unsigned long m) {
    mpz_class r = s % static_cast<long>(m);
    if (r < 0) r += static_cast<long>(m);
    return r.get_ui();
}

} // namespace

unsigned long nu2_closed_form(const mpz_class& s, unsigned long n, int sign) {
    if (sign != 1 && sign != -1) throw domain_error("nu2_closed_form: sign must be +-1");
    if (n == 0) throw domain_error("nu2_closed_form: n must be positive");
    if (mpz_even_p(s.get_mpz_t()) || s == 1 || s == -1)
        throw domain_error("nu2_closed_form: s must be odd with |s| > 1");

    if (sign == -1) {
        // nu_2(s^n + 1)
        if (n % 2 == 1) return vp(2, s + 1);
        return 1;
    }
    // nu_2(s^n - 1)
    if (math_mod(s, 4) == 1 || n % 2 == 0) {
        mpz_class s2m1 = s * s - 1;
        return vp(2, s2m1) - 1 + vp(2, mpz_class(n));
    }
    return 1; // s = 3 (mod 4), n odd
}

OrderData order_data(const mpz_class& r, const mpz_class& s, unsigned long iter_cap) {
    if (s <= 2) throw domain_error("order_data: modulus must exceed 2");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
    if (g != 1) throw domain_error("order_data: base and modulus must be coprime");

    if (iter_cap == 0) {
        // The true n divides lambda(s) <= s; cap guards against contract misuse.
        iter_cap = mpz_fits_ulong_p(s.get_mpz_t()) ? s.get_ui() : ~0ul;
    }

    mpz_class r0 = r % s;
    if (r0 < 0) r0 += s;
    mpz_class sm1 = s - 1;
    mpz_class acc = 1;
    for (unsigned long n = 1; n <= iter_cap; ++n) {
        acc = (acc * r0) % s;
        int delta = 0;
        if (acc == 1) delta = 1;
        else if (acc == sm1) delta = -1;
        if (delta != 0) {
            OrderData out;
            out.n = n;
            out.delta = delta;
            mpz_class rn;
            mpz_pow_ui(rn.get_mpz_t(), r.get_mpz_t(), n);
            out.f = (rn - delta) / s;
            assert(out.f * s + delta == rn && "order_data cofactor must be exact");
            return out;
        }
    }
    throw std::runtime_error("order_data: iteration cap exceeded (invalid input?)");
}

std::optional<PowerWitness> is_perfect_power(const mpz_class& A) {
    if (A <= 1) throw domain_error("is_perfect_power: A must exceed 1");
    size_t bits = mpz_sizeinbase(A.get_mpz_t(), 2);

    // Find the largest k with an exact k-th root; its root is the smallest base.
    // Only prime k need testing directly, but scanning down over all k and
    // taking the first exact hit below would miss composite towers (2^6 should
    // report base 2, not 8), so scan k upward keeping the last success.
    std::optional<PowerWitness> best;
    for (unsigned long k = 2; k <= bits; ++k) {
        mpz_class root;
        int exact = mpz_root(root.get_mpz_t(), A.get_mpz_t(), k);
        if (exact != 0 && root > 1) best = PowerWitness{root, k};
    }
    return best;
}

mpz_class mod_pow(const mpz_class& base, const mpz_class& exponent, const mpz_class& modulus) {
    if (modulus < 1) throw domain_error("mod_pow: modulus must be >= 1");
    if (exponent < 0) throw domain_error("mod_pow: negative exponent");
    mpz_class out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    return out;
}

mpz_class mod_pow(const mpz_class& base, unsigned long exponent, const mpz_class& modulus) {
    if (modulus < 1) throw domain_error("mod_pow: modulus must be >= 1");
    mpz_class out;
    mpz_powm_ui(out.get_mpz_t(), base.get_mpz_t(), exponent, modulus.get_mpz_t());
    return out;
}

mpz_class iroot_floor(const mpz_class& A, unsigned long k) {
    if (A < 0 || k == 0) throw domain_error("iroot_floor: need A >= 0, k >= 1");
    mpz_class root;
    mpz_root(root.get_mpz_t(), A.get_mpz_t(), k);
    return root;
}

mpz_class mpz_from_ull(unsigned long long v) {
    mpz_class out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return out;
}

} // namespace pillai
