#pragma once

// Necessary conditions on pairs and triples of solutions of A^X + lambda*B^Y = C^Z:
// the 2-adic constraints, the order/congruence lemmas, the improved gap principle,
// the inequality filters used by the sieve drivers, and the continued-fraction
// criterion with exact convergent decisions.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pillai/arith.hpp"
#include "pillai/bounds.hpp"
#include "pillai/real.hpp"

namespace pillai {

// One exponent triple. The bases live in the surrounding context.
struct Solution {
    unsigned long x = 1, y = 1, z = 1;
    friend bool operator==(const Solution&, const Solution&) = default;
};

// Canonical order everywhere: z ascending, ties by x, then y.
void sort_solutions(std::vector<Solution>& sols);
void sort_solutions(std::array<Solution, 3>& sols);

// A pair in canonical order together with its cross term X*Y' - X'*Y.
struct PairData {
    Solution s1, s2;
    long long cross = 0; // s1.x*s2.y - s2.x*s1.y
    long long dz = 0, dx = 0, dy = 0;
};
PairData make_pair_data(const Solution& s, const Solution& t);

// Outcome of a hypothesis-guarded check. A failed hypothesis is reported as
// "not applicable" instead of an error so the sieve drivers can branch on it.
struct CheckReport {
    bool applicable = true;
    bool ok = false;
    std::string detail;
};

// (beta,z) = (1,1) or beta*z >= alpha.
bool z_lower_constraint(unsigned long alpha, unsigned long beta, unsigned long z);

// beta*min{Z,Z'} <= alpha + nu2(XY' - X'Y). Throws if the cross term vanishes.
bool pair_2adic_upper(unsigned long alpha, unsigned long beta, const PairData& pd);

// Under beta*Z != 1, beta*Z' != 1 and X !≡ X' (mod 2): Z = alpha/beta or Z' = alpha/beta,
// with alpha = min{alpha_a, alpha_b}.
CheckReport exact_z_case(unsigned long alpha_a, unsigned long alpha_b, unsigned long beta,
                         const PairData& pd);

// The parity case: some pair of solutions differs in x- or y-parity. Then
// (beta,z1) = (1,1) or z1 = alpha/beta.
CheckReport dagger_constraint(unsigned long alpha, unsigned long beta,
                              std::array<Solution, 3> sols);

// A^|XY'-X'Y| ≡ ±1 and B^|XY'-X'Y| ≡ ±1 (mod C^min{Z,Z'}). A vanishing cross term
// with modulus > 2 is impossible for genuine pairs and reports false.
bool lemma_two_check(const mpz_class& A, const mpz_class& B, const mpz_class& C,
                     const PairData& pd);

// Divisibility constraints on exponents n' with r^{n'} ≡ ±1 (mod s), resp. (mod st):
// without t, requires n(r,s) | n'; with t, requires (t*n(r,s)/gcd(t, f(r,s))) | n'.
bool ele1_divisibility(const OrderData& order, unsigned long nprime,
                       std::optional<mpz_class> t = std::nullopt);

// Divisors of the larger solution's first exponent, from f(other_base, C^Z).
struct Y2Report {
    bool part1_applicable = false; // C^Z > 2
    mpz_class d1;                  // gcd(C, f)
    bool part2_applicable = false; // C^Z !≡ 2 (mod 4)
    mpz_class d2;                  // gcd(C^{Z'-Z}, f)
    bool divides(unsigned long xprime) const;
};
Y2Report y2_divisor(const mpz_class& C, unsigned long Z, unsigned long Zprime,
                    const mpz_class& other_base);

// Improved gap principle for three solutions with Z1 < Z2 <= Z3.
//
// cond_ok reports the standing side conditions (no base a perfect power; for
// lambda=+1: 2|C, C>2, max{A,B} >= 11; for lambda=-1: 2|A, A>2, max{B,C} >= 11).
// The inequality clauses are only theorems under cond_ok; the divisibility clause
// does not need the size condition. Callers eliminating candidates must check
// cond_ok before trusting inequality_ok.
struct GapReport {
    bool applicable = false;
    bool cond_ok = false;
    bool divisibility_ok = false;
    bool inequality_ok = false;
    bool k_applicable = false; // lambda=1, or lambda=-1 with G2>1
    bool k_inequality_ok = false;
    Real K = 0;
    int chi = 1;
    std::string detail;
};
enum class GapPart { I, II };
GapReport improved_gap_check(const mpz_class& A, const mpz_class& B, const mpz_class& C,
                             int lambda, std::array<Solution, 3> sols, GapPart part);

// For A^X - B^Y = C^Z with G = gcd(X,Y) > 1:
// X < G/(G-1) * log C/log A * Z and Y < G/(G-1) * log C/log B * Z.
struct XYBounds {
    bool applicable = false;
    Real x_bound = 0, y_bound = 0;
};
XYBounds g2_upper_a_bounds(const mpz_class& A, const mpz_class& B, const mpz_class& C,
                           const Solution& sol, unsigned long G);

// Is p/q a convergent of log C/log B? Decided exactly: every comparison against a
// rational reduces to comparing big-integer powers of C and B. Throws domain_error
// when C and B are multiplicatively dependent (the quotient is rational).
bool cf_convergent_check(unsigned long p, unsigned long q, const mpz_class& C,
                         const mpz_class& B);

// 1/(Z*(log C/log B - Y/Z)), a lower bound for the next convergent denominator.
// Requires Y/Z < log C/log B (checked exactly).
Real cf_gap_lower(unsigned long Z, unsigned long Y, const mpz_class& C, const mpz_class& B);

// A named disjunction/conjunction of inequality branches.
struct DisjunctionReport {
    bool applicable = false;
    std::vector<std::pair<std::string, bool>> branches;
    std::string detail;
    bool any_hold() const;
    bool all_hold() const;
    bool branch(const std::string& name) const; // throws if absent
};

// Equal-z gap propositions: for Z1 = Z2 < Z3 at least one branch holds.
// lambda=+1 needs nothing extra; lambda=-1 additionally needs A < C.
DisjunctionReport equal_z_gap_check(const mpz_class& A, const mpz_class& B,
                                    const mpz_class& C, int lambda,
                                    std::array<Solution, 3> sols);

// A triple of solutions of a^x + b^y = c^z (2|c) together with its 2-adic data.
struct TripleContext {
    mpz_class a, b, c;
    unsigned long alpha = 2, beta = 1, m2_base = 0; // m2_base as in BoundContext
    std::array<Solution, 3> sols;
};

// The z1<z2 / base-exponent inequality filters. Every branch whose hypotheses are
// met is evaluated; the underlying lemmas assert the conjunction of all branches
// in their min-expressions, so a genuine triple satisfies every reported branch.
DisjunctionReport ineq_z1z2_filters(const TripleContext& tc);

// Orderings of a z-sorted triple: indices sorting x (ties by position) and y.
struct TripleOrdering {
    std::array<int, 3> xi; // xi[0]=i, xi[1]=j, xi[2]=k with x_i <= x_j <= x_k
    std::array<int, 3> yi; // l, m, n
    unsigned long dz = 0, dx = 0, dy = 0;
    unsigned long g2 = 1, gx = 1, gy = 1;
};
TripleOrdering compute_ordering(const std::array<Solution, 3>& sols);

} // namespace pillai
