#pragma once

// The sieve drivers: finite searches that close out the seven structural
// scenarios a hypothetical extra solution of a^x + b^y = c^z could live in.
// Each scenario owns a bound table (data/sieve_cases.txt) that limits the
// 2-adic invariants, the z-exponents and one or more bases; build_case_table
// expands those rows into concrete cases, and run_sieve enumerates every
// admissible candidate in a case, discharging it through congruence and
// interval filters before an exact check of the defining equations.
//
// Full-strength caps are far beyond a desktop run. The drivers therefore
// take user caps and report honestly: a run is "complete" only for the
// region actually covered, and anything surviving the filters is returned,
// never discarded.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pillai {

enum class Scenario {
    z1_eq_z2_cmax,  // z1 = z2, c > max{a,b}
    z1_eq_z2_amax,  // z1 = z2, max{a,b} > c
    cmax_2mod4,     // z1 < z2, c > max{a,b}, c = 2 (mod 4)   (beta = 1, z1 = 1)
    cmax_0mod4,     // z1 < z2, c > max{a,b}, c^{z1} = 0 (mod 4)
    amax_dxpos,     // z1 < z2, a > max{b,c}, x1 != x2
    amax_dx0_k3,    // z1 < z2, a > max{b,c}, x1 = x2, largest x on solution 3
    amax_dx0_kne3,  // z1 < z2, a > max{b,c}, x1 = x2 impossible there; ties instead
};

std::optional<Scenario> scenario_from_name(const std::string& name);
std::string scenario_name(Scenario s);
const std::vector<Scenario>& all_scenarios();

// User caps (inclusive); 0 = no cap on that base.
struct SieveCaps {
    mpz_class a = 0, b = 0, c = 0;
};

// A concrete case: fixed 2-adic invariants and z-exponents plus class tags
// and caps, produced by expanding one bound-table row. Lower bounds follow
// the base conventions of the scenario (see make_base_bounds in the source).
// All caps here are inclusive; 0 means unbounded.
struct SieveCase {
    Scenario scenario = Scenario::cmax_2mod4;
    std::string row_id;
    unsigned long alpha = 2, beta = 1;
    unsigned long z1 = 1, z2 = 2;

    int first_11 = -1;  // 1: (x1,y1) = (1,1); 0: not; -1: unconstrained
    int min_le7 = -1;   // 1: min{a,b} <= 7; 0: min{a,b} > 7; -1: unconstrained
    int k3 = -1;        // 1: largest x-exponent on solution 3; 0: not; -1: n/a
    int kne3_case = 0;  // 1..3 for the amax-dx0-kne3 sub-cases, else 0

    unsigned long g2_lo = 1, g2_hi = 0;  // window on odd part of gcd(x2,y2); hi 0 = open
    unsigned long gx_lo = 0, gx_hi = 0;  // window on gcd(y_j, z_j) at the middle
                                         // x-exponent; 0 lo = no constraint
    std::vector<unsigned long> gy_set;   // nonempty: gy restricted to these values
    unsigned long gy_lo = 0;             // nonzero: gy >= gy_lo

    unsigned long dx_min = 0, dx_max = 0;  // window on |x2 - x1|; 0 max = open
    unsigned long x1_min = 1, x1_max = 0;

    mpz_class a0, b0, c0;                 // base lower bounds
    mpz_class a_cap, b_cap, c_cap;        // inclusive caps after user intersection
    mpz_class cdz_cap, bdy_cap;           // caps on c^{z2-z1} resp. b^{|y2-y1|}
};

// Expand a scenario's bound table against user caps. Rows are split into
// concrete (beta, alpha, z1, z2) combinations, pruned by the arithmetic the
// invariants force: min{a,b} <= 7 needs alpha <= 3, 3 | g2 needs z2 <= 2,
// g2 > 3 needs gcd(z2, 6) = 1, and beta*z_t >= alpha unless (beta, z_t) = (1,1).
// Cases whose base lower bounds already exceed their caps are dropped.
// The equal-z scenarios derive their region dynamically and return one case
// per admissible (beta, alpha, z1) instead.
std::vector<SieveCase> build_case_table(Scenario s, const SieveCaps& caps);

// One exponent candidate inside a case. Bases left at 0 are still free; the
// equal-z generators pin a and b because their enumeration is base-first.
// red2_mask records which of the four base-window cases (bits 0..3) are
// feasible for a cmax-2mod4 candidate.
struct CandidateTuple {
    std::size_t case_index = 0;
    unsigned long x1 = 1, y1 = 1, x2 = 1, y2 = 1;
    unsigned long z1 = 1, z2 = 2;
    int sa = 0, sb = 0;      // residues of a, b mod 2^alpha in {+1,-1}; 0 = open
    unsigned red2_mask = 0;
    mpz_class a = 0, b = 0;
};

// Tallies of why candidates were discarded, keyed by filter name.
using PruneCounters = std::map<std::string, unsigned long long>;

// Enumerate the exponent candidates of one case (cmax and amax-dxpos style
// scenarios). Candidates already violating the parity/signature table, the
// pair filters (red1/red5), the settled-signature list, the g2 arithmetic or
// the 2-adic divisibility are not emitted; prunes are tallied if given.
std::vector<CandidateTuple> generate_candidates(const SieveCase& cs,
                                                PruneCounters* pruned = nullptr);

// Base windows implied by a candidate once b is fixed. Which window applies
// depends on the scenario stage; see the source for the derivations.
enum class IntervalKind {
    red2_i,    // cmax-2mod4, a^{x_t} > b^{y_t} for both t
    red2_ii,   // cmax-2mod4, a^{x2} > b^{y2} > ... but a^{x1} < b^{y1}
    red2_iii,  // cmax-2mod4, a^{x2} < b^{y2}, a^{x1} > b^{y1}
    red2_iv,   // cmax-2mod4, both <
    assu8,     // cmax-0mod4 main stage, x1 < x2 region
    red9,      // cmax-0mod4 main stage, y1 < y2 region
    assu14,    // amax-dxpos, z1 >= 2dz, x1 < x2 region
    assu15,    // amax-dxpos, z1 >= 2dz, y1 < y2 region
};

struct BaseInterval {
    mpz_class lo = 0, hi = -1;  // empty when hi < lo
    bool empty() const { return hi < lo; }
};

// The a-window of the given kind for candidate `t` at base b. Endpoints are
// exact rational roots (no floating point), already clamped to [lo0, hi0].
BaseInterval base_interval(IntervalKind kind, const SieveCase& cs,
                           const CandidateTuple& t, const mpz_class& b,
                           const mpz_class& lo0, const mpz_class& hi0);

// Scenario congruences once enough bases are known: the order congruences
// a^{|x1 z2 - x2|} = 1 (mod 2 b^{min y}), b^{|y1 z2 - y2|} = 1 (mod 2 a^{min x})
// for cmax-2mod4, the analogous divisibility pairs of the equal-z scenarios,
// b^{dy} = c^{dz} (mod a^{min x}) resp. a^{x1} | b^{dy} c^{dz} - 1 for the
// amax-dx0-kne3 sub-cases, and b^{y1} | c^{dz} - 1 for amax-dx0-k3.
// True means "consistent or not applicable".
bool congruence_sieve(const SieveCase& cs, const CandidateTuple& t,
                      const mpz_class& a, const mpz_class& b, const mpz_class& c);

struct FilterOutcome {
    bool pass = true;
    std::string reason;
};

// Structural size filters with all bases known: the x1 < x2 or y1 < y2
// closure for z1 < z2, min{a^{x1}, b^{y1}} >= c and min{a^{x2}, b^{y2}} >= c^2
// for the cmax-0mod4 main stage, their c^{dz}-powered analogues plus
// z1 >= 2 dz for amax-dxpos, and min{a^{x2}, b^{y2}} >= c^2 when dz = 1.
FilterOutcome structural_filters(const SieveCase& cs, const CandidateTuple& t,
                                 const mpz_class& a, const mpz_class& b,
                                 const mpz_class& c);

// Exact check of the defining pair of equations. Exactly one base may be
// passed as 0: it is recovered by exact root extraction, returned through
// `recovered`, and the check fails when no integer base fits. With all bases
// known this is a plain evaluation of both equations.
bool final_equation_check(const SieveCase& cs, const CandidateTuple& t,
                          const mpz_class& a, const mpz_class& b,
                          const mpz_class& c, mpz_class* recovered = nullptr);

struct SieveOptions {
    SieveCaps caps;
    unsigned workers = 1;            // 0 = hardware concurrency
    bool three_solution_mode = true; // see below
    std::uint64_t budget_ms = 0;     // 0 = no budget; exceeded => complete=false
    bool validate_table = false;     // cross-check the bound table first
};

// A base triple (with exponent data) that survived every filter of its case.
// status is "survivor", or for the equal-z scenarios in three-solution mode
// "eliminated: ..." when the follow-up search shows no third solution exists.
struct SurvivorRecord {
    mpz_class a, b, c;
    CandidateTuple tuple;
    std::string row_id;
    std::string status = "survivor";
};

struct SieveReport {
    Scenario scenario = Scenario::cmax_2mod4;
    std::size_t cases_total = 0;
    std::size_t cases_run = 0;
    unsigned long long candidates = 0;
    PruneCounters pruned;
    std::vector<SurvivorRecord> survivors;
    bool complete = true;
    std::vector<std::string> notes;
};

// Run one scenario. In three-solution mode the drivers assume a third
// solution exists beyond the two enumerated ones, which is what lets the
// growth-rate caps and the follow-up elimination searches apply; with it
// off, only two solutions are assumed, tables keep defining the search
// region (noted in the report) but the pair-producing survivors are kept.
// Deterministic: the report is identical for any worker count.
SieveReport run_sieve(Scenario s, const SieveOptions& opt);

struct TableValidation {
    bool ok = true;
    std::vector<std::string> issues;
};

// Re-derive the z2 ceilings of a scenario's rows from the growth-rate bound
// machinery and flag any row that claims more than the machinery gives.
// Also enforces the global z2 <= 230 ceiling.
TableValidation validate_case_table(Scenario s);

// Scenario parameters as parsed from the bound table (exact integers).
const std::map<std::string, mpz_class>& scenario_params(Scenario s);

} // namespace pillai
