#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pillai/search.hpp"

#include <algorithm>
#include <random>

#include "pillai/arith.hpp"

using namespace pillai;

namespace {

// Independent power test for the oracle: largest e >= 1 with v = base^e, else 0.
unsigned long power_of(mpz_class v, const mpz_class& base) {
    if (v < base) return 0;
    unsigned long e = 0;
    while (v % base == 0) {
        v /= base;
        ++e;
    }
    return v == 1 ? e : 0;
}

mpz_class pw(unsigned long b, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
}

// Oracle for enumerate_solutions: walk (x, y) instead of (z, x).
std::vector<Solution> enumerate_by_xy(const mpz_class& a, const mpz_class& b,
                                      const mpz_class& c, const mpz_class& cap) {
    std::vector<Solution> sols;
    mpz_class pa = 1;
    for (unsigned long x = 1;; ++x) {
        pa *= a;
        if (pa + b > cap) break;
        mpz_class pb = 1;
        for (unsigned long y = 1;; ++y) {
            pb *= b;
            mpz_class s = pa + pb;
            if (s > cap) break;
            unsigned long z = power_of(s, c);
            if (z > 0) sols.push_back({x, y, z});
        }
    }
    sort_solutions(sols);
    return sols;
}

} // namespace

TEST_CASE("triple flags") {
    Triple t = make_triple(3, 5, 2);
    CHECK(t.pairwise_coprime);
    CHECK_FALSE(t.any_perfect_power);
    CHECK(t.alpha_defined);
    CHECK(t.alpha == 2); // nu2(3^2-1) - 1 = nu2(5^2-1) - 1 = 2
    CHECK(t.beta == 1);
    CHECK(t.a_mod4 == 3);
    CHECK(t.b_mod4 == 1);
    CHECK(t.c_mod2 == 0);

    Triple u = make_triple(7, 2, 3);
    CHECK_FALSE(u.alpha_defined); // b even
    CHECK(u.beta == 0);           // c odd
    CHECK(u.c_mod2 == 1);

    Triple v = make_triple(9, 5, 2);
    CHECK(v.any_perfect_power);
    CHECK(v.alpha == 2); // min{nu2(80), nu2(24)} - 1 = 3 - 1

    Triple w = make_triple(17, 15, 4);
    CHECK(w.alpha == 4); // nu2(288) = nu2(224) = 5
    CHECK(w.beta == 2);

    CHECK(make_triple(4, 6, 2).pairwise_coprime == false);
    CHECK_THROWS_AS(make_triple(1, 5, 2), domain_error);
    CHECK_THROWS_AS(make_triple(3, 5, 0), domain_error);
}

TEST_CASE("classification order and labels") {
    auto kind = [](const mpz_class& a, const mpz_class& b, const mpz_class& c) {
        return classify_triple(make_triple(a, b, c)).kind;
    };
    auto label = [](const mpz_class& a, const mpz_class& b, const mpz_class& c) {
        return classify_triple(make_triple(a, b, c)).label;
    };

    CHECK(kind(4, 6, 2) == DispositionKind::excluded);

    // above the global size ceiling, even when c is odd or a power
    CHECK(kind(3, 5, pw(2, 210)) == DispositionKind::external);
    CHECK(label(3, 5, pw(2, 210)).find("Hu-Le") != std::string::npos);

    CHECK(kind(3, 5, 7) == DispositionKind::external);
    CHECK(label(3, 5, 7).find("Scott-Styer") != std::string::npos);

    // c = 2 wins over the small-base window: (3,5,2) is Scott territory
    CHECK(kind(3, 5, 2) == DispositionKind::external);
    CHECK(label(3, 5, 2).find("Scott") != std::string::npos);
    CHECK(kind(5, 3, 2) == DispositionKind::external);

    CHECK(kind(5, 13, 6) == DispositionKind::reduced);
    CHECK(label(5, 13, 6).find("(mod 4)") != std::string::npos);

    CHECK(kind(3, 7, 10) == DispositionKind::reduced);
    CHECK(label(3, 7, 10).find("c = 2") != std::string::npos);

    CHECK(kind(13, 3, 14) == DispositionKind::external);
    CHECK(label(13, 3, 14).find("prior work") != std::string::npos);
    CHECK(kind(11, 3, 16) == DispositionKind::external);

    CHECK(kind(13, 3, 32) == DispositionKind::reduced);
    CHECK(label(13, 3, 32).find("perfect power") != std::string::npos);

    CHECK(kind(13, 3, 2200) == DispositionKind::search);
}

TEST_CASE("enumerate_solutions fixtures") {
    SolutionSet s = enumerate_solutions(make_triple(3, 5, 2), pw(2, 20));
    REQUIRE(s.solutions.size() == 3);
    CHECK(s.solutions[0] == Solution{1, 1, 3});
    CHECK(s.solutions[1] == Solution{3, 1, 5});
    CHECK(s.solutions[2] == Solution{1, 3, 7});
    CHECK(s.complete_within_box);

    SolutionSet t = enumerate_solutions(make_triple(13, 3, 2200), mpz_class(2200) * 2200 * 2200);
    REQUIRE(t.solutions.size() == 2);
    CHECK(t.solutions[0] == Solution{1, 7, 1}); // 13 + 3^7 = 2200
    CHECK(t.solutions[1] == Solution{3, 1, 1}); // 13^3 + 3 = 2200

    SolutionSet u = enumerate_solutions(make_triple(7, 2, 3), pw(3, 10));
    REQUIRE(u.solutions.size() == 2);
    CHECK(u.solutions[0] == Solution{1, 1, 2});
    CHECK(u.solutions[1] == Solution{2, 5, 4}); // 49 + 32 = 81

    // the cap is inclusive: 3 + 5 = 2^3 sits exactly on it
    CHECK(enumerate_solutions(make_triple(3, 5, 2), 8).solutions.size() == 1);
    CHECK(enumerate_solutions(make_triple(3, 5, 2), 7).solutions.empty());

    CHECK_THROWS_AS(enumerate_solutions(make_triple(3, 5, 7), 5), domain_error);
}

TEST_CASE("enumerate_solutions matches an (x,y)-first strategy on random triples") {
    std::mt19937 rng(20260815u);
    std::uniform_int_distribution<unsigned long> base(2, 40);
    const mpz_class cap = pw(2, 24);
    for (int trial = 0; trial < 200; ++trial) {
        mpz_class a = base(rng), b = base(rng), c = base(rng);
        SolutionSet got = enumerate_solutions(make_triple(a, b, c), cap);
        std::vector<Solution> expect = enumerate_by_xy(a, b, c, cap);
        CAPTURE(a.get_str());
        CAPTURE(b.get_str());
        CAPTURE(c.get_str());
        CHECK(got.solutions == expect);
    }
}

TEST_CASE("verify_box finds exactly the two known three-solution triples") {
    BoxReport r = verify_box(30, pw(2, 30), 3);
    REQUIRE(r.triples_with_3plus.size() == 2);
    CHECK(r.triples_with_3plus[0].a == 3);
    CHECK(r.triples_with_3plus[0].b == 5);
    CHECK(r.triples_with_3plus[0].c == 2);
    CHECK(r.triples_with_3plus[1].a == 5);
    CHECK(r.triples_with_3plus[1].b == 3);
    CHECK(r.triples_with_3plus[1].c == 2);
    CHECK(r.max_count == 3);
    CHECK(r.triples_with_3plus[0].solutions.size() == 3);
    // (5,3,2) mirrors (3,5,2) with x and y swapped
    CHECK(r.triples_with_3plus[1].solutions[0] == Solution{1, 1, 3});
    CHECK(r.triples_with_3plus[1].solutions[1] == Solution{1, 3, 5});
    CHECK(r.triples_with_3plus[1].solutions[2] == Solution{3, 1, 7});
}

TEST_CASE("verify_box report does not depend on the worker count") {
    BoxReport r1 = verify_box(25, pw(2, 26), 1);
    BoxReport r4 = verify_box(25, pw(2, 26), 4);
    CHECK(r1.max_count == r4.max_count);
    CHECK(r1.triples_scanned == r4.triples_scanned);
    REQUIRE(r1.triples_with_3plus.size() == r4.triples_with_3plus.size());
    for (size_t i = 0; i < r1.triples_with_3plus.size(); ++i) {
        CHECK(r1.triples_with_3plus[i].a == r4.triples_with_3plus[i].a);
        CHECK(r1.triples_with_3plus[i].b == r4.triples_with_3plus[i].b);
        CHECK(r1.triples_with_3plus[i].c == r4.triples_with_3plus[i].c);
        CHECK(r1.triples_with_3plus[i].solutions == r4.triples_with_3plus[i].solutions);
    }
}

TEST_CASE("gap predicates hold on every enumerated multi-solution system") {
    // Ground truth feeds the filter modules: whatever the box search finds with
    // two or more solutions (a, b odd and coprime, c even) must pass every
    // 2-adic and divisibility predicate, or the sieve would discard real systems.
    const mpz_class cap = pw(2, 28);
    int systems = 0, pairs = 0;
    for (unsigned long av = 3; av <= 41; av += 2) {
        for (unsigned long bv = 3; bv <= 41; bv += 2) {
            for (unsigned long cv = 2; cv <= 40; cv += 2) {
                Triple t = make_triple(av, bv, cv);
                if (!t.pairwise_coprime) continue;
                SolutionSet s = enumerate_solutions(t, cap);
                if (s.solutions.size() < 2) continue;
                ++systems;
                unsigned long alpha_a = vp(2, t.a * t.a - 1) - 1;
                unsigned long alpha_b = vp(2, t.b * t.b - 1) - 1;
                for (const Solution& sol : s.solutions) {
                    CAPTURE(av);
                    CAPTURE(bv);
                    CAPTURE(cv);
                    CHECK(z_lower_constraint(t.alpha, t.beta, sol.z));
                }
                for (size_t i = 0; i < s.solutions.size(); ++i) {
                    for (size_t j = i + 1; j < s.solutions.size(); ++j) {
                        ++pairs;
                        PairData pd = make_pair_data(s.solutions[i], s.solutions[j]);
                        mpz_class czmin;
                        mpz_pow_ui(czmin.get_mpz_t(), t.c.get_mpz_t(), pd.s1.z);
                        CAPTURE(av);
                        CAPTURE(bv);
                        CAPTURE(cv);
                        CAPTURE(pd.s1.x);
                        CAPTURE(pd.s2.x);
                        if (czmin > 2) {
                            CHECK(pd.cross != 0);
                            CHECK(pair_2adic_upper(t.alpha, t.beta, pd));
                            CHECK(lemma_two_check(t.a, t.b, t.c, pd));
                        }
                        CheckReport ex = exact_z_case(alpha_a, alpha_b, t.beta, pd);
                        if (ex.applicable) CHECK(ex.ok);
                        if (pd.s1.z < pd.s2.z) {
                            Y2Report yb = y2_divisor(t.c, pd.s1.z, pd.s2.z, t.b);
                            CHECK(yb.divides(pd.s2.x));
                            Y2Report ya = y2_divisor(t.c, pd.s1.z, pd.s2.z, t.a);
                            CHECK(ya.divides(pd.s2.y));
                        }
                    }
                }
            }
        }
    }
    // the box genuinely exercises the predicates
    CHECK(systems >= 8);
    CHECK(pairs >= 10);
}

TEST_CASE("ab_solutions fixtures and annotations") {
    auto sols = ab_solutions(13, 3, 8);
    auto has = [&](unsigned long x, unsigned long y, unsigned long X, unsigned long Y) {
        return std::any_of(sols.begin(), sols.end(), [&](const AbSolution& s) {
            return s.x == x && s.y == y && s.X == X && s.Y == Y;
        });
    };
    REQUIRE(has(1, 7, 3, 1)); // 13 + 3^7 = 13^3 + 3 = 2200

    for (const AbSolution& s : sols) {
        CHECK(s.divides_b); // 3^Y | 13^{X-x} - 1
        CHECK(s.divides_a); // 13^x | 3^{y-Y} - 1
        CHECK(s.fraction_lt_1);
        CHECK(s.y_gt_X); // 13 > 3
        CHECK(s.y_ge_4);
        // X/x = y/Y can never be a common integer ratio
        CHECK_FALSE((s.X % s.x == 0 && s.y % s.Y == 0 && s.X / s.x == s.y / s.Y));
    }

    auto small = ab_solutions(2, 3, 8);
    auto has2 = [&](unsigned long x, unsigned long y, unsigned long X, unsigned long Y) {
        return std::any_of(small.begin(), small.end(), [&](const AbSolution& s) {
            return s.x == x && s.y == y && s.X == X && s.Y == Y;
        });
    };
    CHECK(has2(3, 3, 5, 1)); // 8 + 27 = 32 + 3 = 35
    CHECK(has2(4, 5, 8, 1)); // 16 + 243 = 256 + 3 = 259
    for (const AbSolution& s : small) {
        CHECK(s.divides_b);
        CHECK(s.divides_a);
        CHECK(s.fraction_lt_1);
        CHECK_FALSE((s.X % s.x == 0 && s.y % s.Y == 0 && s.X / s.x == s.y / s.Y));
    }

    CHECK(ab_solutions(2, 3, 0).empty());
    CHECK_THROWS_AS(ab_solutions(4, 2, 5), domain_error);
}

TEST_CASE("x_plus_one_congruence") {
    // A = 2*B^{3Y} - x*B^{2Y} - B^Y + 1 with B=3, Y=2, x=5: in the residue
    // class but too big for the r-form, so the size branch fires.
    XPlusOneReport big = x_plus_one_congruence(1045, 3, 5, 2);
    CHECK(big.congruence_ok);
    CHECK(big.size_ok);
    CHECK(big.subcase_applicable);
    CHECK(big.subcase == 1);

    // A = r*B^{2Y} - B^Y + 1 with r = 1 <= floor(3/2), x = 5 >= B^Y + r = 4.
    XPlusOneReport small = x_plus_one_congruence(7, 3, 5, 1);
    CHECK(small.congruence_ok);
    CHECK(small.subcase == 2);
    CHECK(small.r == 1);

    // 23 is not congruent to -1*9 - 3 + 1 = 16 (mod 27).
    XPlusOneReport off = x_plus_one_congruence(23, 3, 1, 1);
    CHECK(off.required_residue == 16);
    CHECK_FALSE(off.congruence_ok);
    CHECK_FALSE(off.subcase_applicable);

    // B = 2 never splits into subcases.
    XPlusOneReport b2 = x_plus_one_congruence(11, 2, 1, 1);
    CHECK(b2.congruence_ok); // -4 - 2 + 1 = 3 (mod 8)
    CHECK(b2.size_ok);
    CHECK_FALSE(b2.subcase_applicable);

    CHECK_THROWS_AS(x_plus_one_congruence(3, 5, 1, 1), domain_error);
    CHECK_THROWS_AS(x_plus_one_congruence(5, 1, 1, 1), domain_error);
    CHECK_THROWS_AS(x_plus_one_congruence(7, 3, 0, 1), domain_error);
}
