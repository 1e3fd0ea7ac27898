#pragma once

// Ground truth at desk scale: exhaustive enumeration of a^x + b^y = c^z inside
// a finite box, classification of triples against the known external results,
// box-wide verification of the at-most-two-solutions statement, and the
// auxiliary two-base equation A^x + B^y = A^X + B^Y.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "pillai/gap.hpp"

namespace pillai {

// A base triple with its derived 2-adic and residue flags. Flags are computed
// once in make_triple and never stored independently of (a,b,c).
struct Triple {
    mpz_class a, b, c;
    bool pairwise_coprime = false;
    bool any_perfect_power = false;
    bool alpha_defined = false; // requires both a and b odd
    unsigned long alpha = 0;    // min{nu2(a^2-1), nu2(b^2-1)} - 1
    unsigned long beta = 0;     // nu2(c), 0 for odd c
    int a_mod4 = 0, b_mod4 = 0, c_mod2 = 0;
};

Triple make_triple(const mpz_class& a, const mpz_class& b, const mpz_class& c);

// How a triple is disposed of before any search is attempted.
enum class DispositionKind {
    excluded, // hypothesis violated (coprimality)
    external, // settled by a prior result, cited by name
    reduced,  // removed by an elementary reduction
    search,   // lies in the residual domain the solver has to handle
};

struct Disposition {
    DispositionKind kind = DispositionKind::search;
    std::string label;
};

Disposition classify_triple(const Triple& t);

struct SolutionSet {
    Triple triple;
    std::vector<Solution> solutions; // sorted: z ascending, ties by x, then y
    mpz_class cap;                   // box bound on c^z; exponent caps derive from it
    bool complete_within_box = true;
};

// Every (x,y,z) with a^x + b^y = c^z and c^z <= cap. For each z the loop walks
// a^x < c^z and tests the remainder as a pure power of b by exact division,
// so there are no rounding effects near the cap. Throws if cap < c.
SolutionSet enumerate_solutions(const Triple& t, const mpz_class& cap);

struct BoxEntry {
    mpz_class a, b, c;
    std::vector<Solution> solutions;
};

struct BoxReport {
    std::vector<BoxEntry> triples_with_3plus; // sorted by (a,b,c)
    unsigned long max_count = 0;
    unsigned long long triples_scanned = 0;
};

// Enumerates every pairwise-coprime triple 1 < a,b,c <= max_base and reports
// the ones with three or more solutions in the box. The worker count only
// changes the schedule, never the report.
BoxReport verify_box(unsigned long max_base, const mpz_class& cap, unsigned workers = 1);

// One solution of A^x + B^y = A^X + B^Y with x < X and y > Y, annotated with
// the elementary facts every solution must satisfy.
struct AbSolution {
    unsigned long x = 0, y = 0, X = 0, Y = 0;
    bool divides_b = false;  // B^Y | A^{X-x} - 1
    bool divides_a = false;  // A^x | B^{y-Y} - 1
    bool fraction_lt_1 = false; // x/X + Y/y < 1
    bool y_gt_X = false, y_ge_4 = false; // asserted only when A > B
};

// All solutions with every exponent at most max_exp, found by exhaustive
// value matching. gcd(A,B) = 1 required.
std::vector<AbSolution> ab_solutions(const mpz_class& A, const mpz_class& B,
                                     unsigned long max_exp);

// Congruence and case analysis for consecutive A-exponents (X = x + 1) in
// A^x + B^y = A^X + B^Y, which forces A into a narrow residue class mod B^{3Y}.
struct XPlusOneReport {
    mpz_class required_residue;  // class of A mod B^{3Y}
    bool congruence_ok = false;
    bool size_ok = false;        // A >= B^{3Y} - x*B^{2Y} - B^Y + 1
    // For B > 2 the congruence splits: either A is at least about B^{3Y}/2
    // (subcase 1) or A = r*B^{2Y} - B^Y + 1 with a small witness r (subcase 2).
    bool subcase_applicable = false;
    int subcase = 0;
    mpz_class r; // subcase 2 witness, r = -x (mod B^Y), r <= floor(B^Y/2)
};

XPlusOneReport x_plus_one_congruence(const mpz_class& A, const mpz_class& B,
                                     unsigned long x, unsigned long Y);

} // namespace pillai
