#pragma once

// Static generalized-Fermat knowledge and the gcd/parity filters derived from it:
// the ten known X^p + Y^q = Z^r identities, the table of settled exponent
// signatures, the g2/gx common-divisor filters, the mod-4 parity cases, the
// parity/signature table, and the red1/red5 candidate filters used by the sieve.
//
// The signature table and the identity list are axioms here: rows are matched,
// never re-proved. They ship as plain-text data files; the embedded copies and
// the files must agree (tested), so either can be treated as authoritative.

#include <string>
#include <vector>

#include <gmpxx.h>

namespace pillai {

// One identity X^p + Y^q = Z^r. p == 0 marks an exponent that can be any
// positive integer, which only happens for X == 1.
struct GfeIdentity {
    mpz_class X, Y, Z;
    unsigned long p = 1, q = 1, r = 1;
    friend bool operator==(const GfeIdentity&, const GfeIdentity&) = default;
};

const std::vector<GfeIdentity>& gfe_identities();
bool gfe_identity_holds(const GfeIdentity& id);

// Does lhs1 + lhs2 = rhs coincide, as values and in either operand order,
// with one of the ten identities?
bool equation_is_listed_identity(const mpz_class& lhs1, const mpz_class& lhs2,
                                 const mpz_class& rhs);

// A settled exponent signature: X^p + Y^q = Z^r has no solutions beyond the
// identity list whenever (p,q,r) matches. Pattern entries equal to 0 stand for
// a shared variable N constrained by [n_min, n_max] or by an explicit set; a
// row with requires_z_div5 applies only when 5 | Z is known.
struct SignatureRow {
    unsigned long p = 0, q = 0, r = 0;
    unsigned long n_min = 1;
    unsigned long n_max = 0; // 0 = unbounded
    std::vector<unsigned long> n_set;
    bool requires_z_div5 = false;
    friend bool operator==(const SignatureRow&, const SignatureRow&) = default;
};

const std::vector<SignatureRow>& settled_signatures();

// Is (p,q,r) settled? Matching tries both operand orders (p,q) and (q,p).
bool signature_settled(unsigned long p, unsigned long q, unsigned long r,
                       bool z_div5 = false);

// Is some descent (p,q,r) with p | x, q | y, r | z settled? When it is, a
// coprime A^x + B^y = C^z can only come from the identity list. z_base_div5
// says whether 5 divides the base on the Z side.
bool signature_rules_out(unsigned long x, unsigned long y, unsigned long z,
                         bool z_base_div5 = false);

// Common-divisor filter for the second solution: g2 = gcd(x2, y2). True iff
// (g2, z2, beta, z1, c) is consistent with every clause.
bool g2_filter(unsigned long g2, unsigned long z2, unsigned long beta,
               unsigned long z1, const mpz_class& c);

// Common-divisor filter on one side: gx = gcd(y_j, z_j) for the middle
// x-exponent x_j (or the mirrored gcd(x_m, z_m) for y_m, with a := b).
bool gx_filter(unsigned long gx, unsigned long xj, const mpz_class& a);

// Admissible (x mod 2, y mod 2) pairs when a^x + b^y = c^z with 4 | c^z,
// keyed on (a mod 4, b mod 4). Empty for a = b = 1 (mod 4): that residue
// combination forces c^z = 2 (mod 4), hence z = 1. Throws unless a, b odd.
struct XYParity {
    int x = 0, y = 0; // 0 even, 1 odd
    friend bool operator==(const XYParity&, const XYParity&) = default;
};
std::vector<XYParity> parity_cases(const mpz_class& a, const mpz_class& b);

// One admissible combination of exponent parities and base signature for the
// two-solution system with c^{z1} = 0 (mod 4). Parities use the 1 = odd,
// 2 = even coding; sa, sb are the residues of a, b mod 2^alpha in {+1,-1}.
struct ParitySignatureRow {
    int px1 = 1, py1 = 1, px2 = 1, py2 = 1;
    int sa = -1, sb = -1;
    friend bool operator==(const ParitySignatureRow&, const ParitySignatureRow&) = default;
};

// Exactly the 12 rows that survive of the 16 x 3 parity/signature combinations.
const std::vector<ParitySignatureRow>& parsig_table();

// The underlying predicate: parity clauses consistent with the signature.
// parsig_table() is exactly the admissible subset (tested by regeneration).
bool parsig_admissible(const ParitySignatureRow& row);

// Candidate (x1,y1,x2,y2,z2) for the system a^{x1} + b^{y1} = c,
// a^{x2} + b^{y2} = c^{z2} with c = 2 (mod 4), c > max{a,b}, z2 > 1.
struct Sys2Candidate {
    unsigned long x1 = 1, y1 = 1, x2 = 1, y2 = 1, z2 = 2;
};

// True iff the candidate passes every clause. The last clause applies only
// for b < 11; its bounded-search evidence ships in data/red1_facts.txt.
bool red1_filter(const Sys2Candidate& t, const mpz_class& b);

// Candidate (x1,y1,z1,x2,y2,z2) for the system a^{x1} + b^{y1} = c^{z1},
// a^{x2} + b^{y2} = c^{z2} with z1 < z2 and c^{z1} = 0 (mod 4).
struct Sys12Candidate {
    unsigned long x1 = 1, y1 = 1, z1 = 2, x2 = 1, y2 = 1, z2 = 3;
};

// True iff the candidate passes every clause; a_mod4, b_mod4 in {1, 3}.
bool red5_filter(const Sys12Candidate& t, int a_mod4, int b_mod4, const mpz_class& b);

// One row of the bounded-search fact table behind red1's last clause:
// A^2 + b^{y2} = C^3 with b in {3,5,7} and C <= c_cap (see the generator
// in tools/). Every solution in range is listed.
struct Red1Fact {
    unsigned long b = 3;
    mpz_class A;
    unsigned long y2 = 1;
    unsigned long C = 1;
    friend bool operator==(const Red1Fact&, const Red1Fact&) = default;
};

// Loaders for the shipped data files. A path of "" means the default
// location under the build-time data directory.
std::vector<GfeIdentity> load_gfe_identities(const std::string& path = "");
std::vector<SignatureRow> load_settled_signatures(const std::string& path = "");
std::vector<ParitySignatureRow> load_parsig_table(const std::string& path = "");
std::vector<Red1Fact> load_red1_facts(const std::string& path = "");

// Absolute path of a shipped data file.
std::string data_file_path(const std::string& name);

} // namespace pillai
