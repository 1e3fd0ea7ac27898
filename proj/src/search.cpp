#include "pillai/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <utility>

#include "pillai/arith.hpp"

namespace pillai {

namespace {

// Largest y >= 1 with v = b^y, or 0 if v is not a positive power of b.
unsigned long pow_index(mpz_class v, const mpz_class& b) {
    if (v < b) return 0;
    unsigned long y = 0;
    while (mpz_divisible_p(v.get_mpz_t(), b.get_mpz_t())) {
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), b.get_mpz_t());
        ++y;
    }
    return v == 1 ? y : 0;
}

mpz_class pow_ul(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

const mpz_class& hu_le_ceiling() {
    static const mpz_class m = [] {
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), 10, 62);
        return t;
    }();
    return m;
}

} // namespace

Triple make_triple(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
    if (a <= 1 || b <= 1 || c <= 1)
        throw domain_error("make_triple: bases must exceed 1");
    Triple t;
    t.a = a;
    t.b = b;
    t.c = c;
    t.pairwise_coprime = gcd(a, b) == 1 && gcd(a, c) == 1 && gcd(b, c) == 1;
    t.any_perfect_power = is_perfect_power(a).has_value() ||
                          is_perfect_power(b).has_value() ||
                          is_perfect_power(c).has_value();
    t.a_mod4 = static_cast<int>(mpz_fdiv_ui(a.get_mpz_t(), 4));
    t.b_mod4 = static_cast<int>(mpz_fdiv_ui(b.get_mpz_t(), 4));
    t.c_mod2 = static_cast<int>(mpz_fdiv_ui(c.get_mpz_t(), 2));
    if (t.c_mod2 == 0) t.beta = vp(2, c);
    if (t.a_mod4 % 2 == 1 && t.b_mod4 % 2 == 1) {
        t.alpha_defined = true;
        t.alpha = std::min(vp(2, a * a - 1), vp(2, b * b - 1)) - 1;
    }
    return t;
}

Disposition classify_triple(const Triple& t) {
    using K = DispositionKind;
    if (!t.pairwise_coprime)
        return {K::excluded, "bases not pairwise coprime"};
    const mpz_class& mx_all = std::max({t.a, t.b, t.c});
    if (mx_all > hu_le_ceiling())
        return {K::external, "max{a,b,c} > 10^62 (Hu-Le)"};
    if (t.c_mod2 == 1)
        return {K::external, "c odd (Scott-Styer)"};
    if (t.c == 2)
        return {K::external, "c = 2 (Scott)"};
    // c is even and > 2, so a and b are odd from here on.
    if (t.a_mod4 == 1 && t.b_mod4 == 1)
        return {K::reduced, "a = b = 1 (mod 4): c^z = 2 (mod 4) forces z = 1"};
    if (std::max(t.a, t.b) < 11)
        return {K::reduced, "max{a,b} < 11 with c even forces c = 2"};
    if (mx_all < 18)
        return {K::external, "max{a,b,c} < 18: settled in prior work"};
    if (t.any_perfect_power)
        return {K::reduced, "a base is a perfect power: restate with primitive bases"};
    return {K::search, "residual domain"};
}

SolutionSet enumerate_solutions(const Triple& t, const mpz_class& cap) {
    if (cap < t.c)
        throw domain_error("enumerate_solutions: cap below c leaves no room for z = 1");
    SolutionSet out;
    out.triple = t;
    out.cap = cap;

    // Powers of a strictly below the cap; apow[i] = a^{i+1}.
    std::vector<mpz_class> apow;
    for (mpz_class p = t.a; p < cap; p *= t.a) apow.push_back(p);

    mpz_class cz = t.c, rest;
    for (unsigned long z = 1; cz <= cap; ++z) {
        for (unsigned long i = 0; i < apow.size() && apow[i] < cz; ++i) {
            rest = cz - apow[i];
            unsigned long y = pow_index(rest, t.b);
            if (y > 0) out.solutions.push_back({i + 1, y, z});
        }
        if (cz > cap / t.c) break; // next power would pass the cap
        cz *= t.c;
    }
    sort_solutions(out.solutions);
    return out;
}

BoxReport verify_box(unsigned long max_base, const mpz_class& cap, unsigned workers) {
    if (max_base < 2) throw domain_error("verify_box: max_base must be at least 2");
    if (workers == 0) workers = 1;

    struct Slot {
        std::vector<BoxEntry> entries;
        unsigned long max_count = 0;
        unsigned long long scanned = 0;
    };
    // One slot per value of a, merged in a-order afterwards, so the report
    // never depends on which worker finished first.
    std::vector<Slot> slots(max_base - 1);
    std::atomic<unsigned long> next{0};

    auto body = [&] {
        for (;;) {
            unsigned long idx = next.fetch_add(1);
            if (idx >= slots.size()) return;
            Slot& slot = slots[idx];
            mpz_class a = idx + 2;
            for (unsigned long bv = 2; bv <= max_base; ++bv) {
                mpz_class b = bv;
                if (gcd(a, b) != 1) continue;
                for (unsigned long cv = 2; cv <= max_base; ++cv) {
                    mpz_class c = cv;
                    if (gcd(a, c) != 1 || gcd(b, c) != 1) continue;
                    ++slot.scanned;
                    if (cap < c) continue; // no z fits in the box
                    SolutionSet s = enumerate_solutions(make_triple(a, b, c), cap);
                    unsigned long n = s.solutions.size();
                    slot.max_count = std::max(slot.max_count, n);
                    if (n >= 3)
                        slot.entries.push_back({a, b, c, std::move(s.solutions)});
                }
            }
        }
    };

    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();

    BoxReport report;
    for (Slot& slot : slots) {
        report.max_count = std::max(report.max_count, slot.max_count);
        report.triples_scanned += slot.scanned;
        for (BoxEntry& e : slot.entries)
            report.triples_with_3plus.push_back(std::move(e));
    }
    // Within a slot b and c already run in increasing order.
    return report;
}

std::vector<AbSolution> ab_solutions(const mpz_class& A, const mpz_class& B,
                                     unsigned long max_exp) {
    if (A <= 1 || B <= 1 || gcd(A, B) != 1)
        throw domain_error("ab_solutions: bases must exceed 1 and be coprime");
    if (max_exp == 0) return {};

    // value -> all (x, y) producing it; exact values keep collisions honest.
    std::map<mpz_class, std::vector<std::pair<unsigned long, unsigned long>>> seen;
    std::vector<mpz_class> bpow(max_exp + 1);
    bpow[0] = 1;
    for (unsigned long y = 1; y <= max_exp; ++y) bpow[y] = bpow[y - 1] * B;
    mpz_class pa = 1;
    for (unsigned long x = 1; x <= max_exp; ++x) {
        pa *= A;
        for (unsigned long y = 1; y <= max_exp; ++y)
            seen[pa + bpow[y]].push_back({x, y});
    }

    std::vector<AbSolution> out;
    for (const auto& [value, hits] : seen) {
        for (size_t i = 0; i < hits.size(); ++i) {
            for (size_t j = i + 1; j < hits.size(); ++j) {
                // Distinct representations; orient so x < X (equal x would
                // force equal y, which a map key collision cannot produce).
                auto [x1, y1] = hits[i];
                auto [x2, y2] = hits[j];
                if (x1 > x2) { std::swap(x1, x2); std::swap(y1, y2); }
                AbSolution s;
                s.x = x1; s.X = x2; s.y = y1; s.Y = y2;
                mpz_class bY = pow_ul(B, s.Y);
                mpz_class ax = pow_ul(A, s.x);
                s.divides_b = mpz_divisible_p(mpz_class(pow_ul(A, s.X - s.x) - 1).get_mpz_t(),
                                              bY.get_mpz_t());
                s.divides_a = mpz_divisible_p(mpz_class(pow_ul(B, s.y - s.Y) - 1).get_mpz_t(),
                                              ax.get_mpz_t());
                // x/X + Y/y < 1 without rational arithmetic: x*y + X*Y < X*y.
                s.fraction_lt_1 = s.x * s.y + s.X * s.Y < s.X * s.y;
                if (A > B) {
                    s.y_gt_X = s.y > s.X;
                    s.y_ge_4 = s.y >= 4;
                }
                out.push_back(s);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const AbSolution& l, const AbSolution& r) {
        return std::tie(l.x, l.y, l.X, l.Y) < std::tie(r.x, r.y, r.X, r.Y);
    });
    return out;
}

XPlusOneReport x_plus_one_congruence(const mpz_class& A, const mpz_class& B,
                                     unsigned long x, unsigned long Y) {
    if (B <= 1 || A <= B)
        throw domain_error("x_plus_one_congruence: needs A > B > 1");
    if (x == 0 || Y == 0)
        throw domain_error("x_plus_one_congruence: exponents start at 1");

    XPlusOneReport rep;
    mpz_class bY = pow_ul(B, Y);
    mpz_class b2Y = bY * bY;
    mpz_class b3Y = b2Y * bY;

    mpz_class target = -(mpz_class(x) * b2Y) - bY + 1;
    mpz_mod(rep.required_residue.get_mpz_t(), target.get_mpz_t(), b3Y.get_mpz_t());
    mpz_class a_res;
    mpz_mod(a_res.get_mpz_t(), A.get_mpz_t(), b3Y.get_mpz_t());
    rep.congruence_ok = a_res == rep.required_residue;
    rep.size_ok = A >= b3Y + target; // A >= B^{3Y} - x B^{2Y} - B^Y + 1

    if (rep.congruence_ok && B > 2) {
        rep.subcase_applicable = true;
        // Subcase 2 first: A = r B^{2Y} - B^Y + 1 with r = -x (mod B^Y),
        // 1 <= r <= floor(B^Y / 2), and x >= B^Y + r.
        mpz_class num = A + bY - 1;
        if (mpz_divisible_p(num.get_mpz_t(), b2Y.get_mpz_t())) {
            mpz_class r = num / b2Y;
            mpz_class want;
            mpz_class neg_x = -mpz_class(x);
            mpz_mod(want.get_mpz_t(), neg_x.get_mpz_t(), bY.get_mpz_t());
            mpz_class r_res;
            mpz_mod(r_res.get_mpz_t(), r.get_mpz_t(), bY.get_mpz_t());
            if (r >= 1 && r_res == want && 2 * r <= bY && mpz_class(x) >= bY + r) {
                rep.subcase = 2;
                rep.r = r;
                return rep;
            }
        }
        // Subcase 1: the size bound 2A >= B^{3Y} + B^{2Y} - 2 B^Y + 2 for odd B,
        // and 2A >= B^{3Y} - 2 B^Y + 2 for even B.
        mpz_class twoA = 2 * A;
        mpz_class bound = b3Y - 2 * bY + 2;
        if (mpz_odd_p(B.get_mpz_t())) bound += b2Y;
        if (twoA >= bound) rep.subcase = 1;
    }
    return rep;
}

} // namespace pillai
