#include "pillai/sieve.hpp"

#include "pillai/arith.hpp"
#include "pillai/bounds.hpp"
#include "pillai/constraints.hpp"
#include "pillai/gap.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <unordered_map>

namespace pillai {

namespace {

using u64 = std::uint64_t;
using Clock = std::chrono::steady_clock;

mpz_class pow_of(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

mpz_class pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

unsigned long nu2(const mpz_class& n) {
    if (n == 0) throw domain_error("nu2: zero argument");
    return mpz_scan1(n.get_mpz_t(), 0);
}

unsigned long odd_part_ul(unsigned long g) {
    while (g && g % 2 == 0) g /= 2;
    return g;
}

// Largest e >= 0 with base^e <= bound (base >= 2, bound >= 0).
unsigned long max_exp(const mpz_class& base, const mpz_class& bound) {
    if (base < 2) throw domain_error("max_exp: base must be >= 2");
    unsigned long e = 0;
    mpz_class p = base;
    while (p <= bound) {
        p *= base;
        ++e;
    }
    return e;
}

mpz_class floor_root(const mpz_class& n, unsigned long q) {
    if (n < 0 || q == 0) throw domain_error("floor_root: bad arguments");
    mpz_class r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), q);
    return r;
}

// Largest t >= 0 with t^q * D <= N (D >= 1). Exact; no floating point.
mpz_class floor_root_rat(const mpz_class& N, const mpz_class& D, unsigned long q) {
    if (D < 1 || q == 0) throw domain_error("floor_root_rat: bad arguments");
    if (N < D) return 0;
    mpz_class t = floor_root(N / D, q);
    while (pow_of(t + 1, q) * D <= N) ++t;
    while (t > 0 && pow_of(t, q) * D > N) --t;
    return t;
}

// Smallest t >= 0 with t^q * D >= N.
mpz_class ceil_root_rat(const mpz_class& N, const mpz_class& D, unsigned long q) {
    if (N <= 0) return 0;
    mpz_class t = floor_root_rat(N, D, q);
    while (pow_of(t, q) * D < N) ++t;
    return t;
}

// Exponent k >= 1 with n == base^k, or 0 when there is none.
unsigned long exact_power_of(const mpz_class& n, const mpz_class& base) {
    if (base < 2 || n < 1) return 0;
    mpz_class t = n;
    unsigned long k = 0;
    while (mpz_divisible_p(t.get_mpz_t(), base.get_mpz_t())) {
        t /= base;
        ++k;
    }
    return t == 1 ? k : 0;
}

u64 mod_mul_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 mod_pow_u64(u64 base, u64 e, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mod_mul_u64(r, base, m);
        base = mod_mul_u64(base, base, m);
        e >>= 1;
    }
    return r;
}

bool fits_u64(const mpz_class& n) { return n > 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 63; }

u64 to_u64(const mpz_class& n) { return mpz_get_ui(n.get_mpz_t()); }

// First value >= lo congruent to r (mod m).
mpz_class align_up(const mpz_class& lo, const mpz_class& m, const mpz_class& r) {
    mpz_class d = (r - lo) % m;
    if (d < 0) d += m;
    return lo + d;
}

mpz_class sig_residue(int s, unsigned long alpha) {
    return s > 0 ? mpz_class(1) : mpz_class(pow2(alpha) - 1);
}

// min{nu2(a^2-1), nu2(b^2-1)} == alpha + 1, the exactness condition that pins
// a base pair to its case.
bool exact_alpha_pair(const mpz_class& a, const mpz_class& b, unsigned long alpha) {
    unsigned long va = nu2(a * a - 1), vb = nu2(b * b - 1);
    return std::min(va, vb) == alpha + 1;
}

bool is_nonpower(const mpz_class& n) { return !is_perfect_power(n).has_value(); }

// Exact integer from a decimal-scientific literal (870000, 8.7e5, 1.04e6, ...).
mpz_class parse_amount(const std::string& s) {
    std::string digits;
    long frac = 0, exp10 = 0;
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    if (digits.empty()) throw domain_error("parse_amount: bad literal '" + s + "'");
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i++];
            ++frac;
        }
    }
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        if (i < s.size() && s[i] == '+') ++i;
        std::string e;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e += s[i++];
        if (e.empty()) throw domain_error("parse_amount: bad exponent in '" + s + "'");
        exp10 = std::stol(e);
    }
    if (i != s.size()) throw domain_error("parse_amount: trailing junk in '" + s + "'");
    if (exp10 < frac) throw domain_error("parse_amount: non-integer literal '" + s + "'");
    mpz_class r(digits);
    return r * pow_of(10, static_cast<unsigned long>(exp10 - frac));
}

// ------------------------------------------------------------------
// Bound-table file

struct RawRow {
    std::string id;
    unsigned long alpha_eq = 0, alpha_hi = 0;
    unsigned long beta_hi = 0;
    unsigned long z1_eq = 0, z1_hi = 0;
    unsigned long z2_eq = 0, z2_hi = 0;
    unsigned long dz_eq = 0;
    bool has_dz = false;
    unsigned long dx_eq = 0, dx_lo = 0;
    unsigned long x1_eq = 0, x1_lo = 0, x1_hi = 0;
    unsigned long g2_eq = 0, g2_lo = 0;
    unsigned long gx_eq = 0, gx_lo = 0;
    std::vector<unsigned long> gy_set;
    unsigned long gy_lo = 0;
    mpz_class a_lt = 0, b_lt = 0, c_lt = 0, cdz_lt = 0, bdy_lt = 0;
    int first = -1, minb = -1, k = -1;
    int kcase = 0;
};

struct ScenarioConfig {
    std::map<std::string, mpz_class> params;
    std::vector<RawRow> rows;
};

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

void apply_row_token(RawRow& row, const std::string& tok) {
    std::string field, op, value;
    std::size_t pos;
    if ((pos = tok.find("<=")) != std::string::npos) op = "<=";
    else if ((pos = tok.find(">=")) != std::string::npos) op = ">=";
    else if ((pos = tok.find('<')) != std::string::npos) op = "<";
    else if ((pos = tok.find('=')) != std::string::npos) op = "=";
    else throw domain_error("sieve table: bad row token '" + tok + "'");
    field = tok.substr(0, pos);
    value = tok.substr(pos + op.size());

    auto ul = [&] { return mpz_get_ui(parse_amount(value).get_mpz_t()); };
    if (field == "id" && op == "=") { row.id = value; return; }
    if (field == "first" && op == "=") { row.first = (value == "11") ? 1 : 0; return; }
    if (field == "min" && op == "=") { row.minb = (value == "le7") ? 1 : 0; return; }
    if (field == "k" && op == "=") { row.k = (value == "3") ? 1 : 0; return; }
    if (field == "case" && op == "=") {
        row.kcase = (value == "i") ? 1 : (value == "ii") ? 2 : (value == "iii") ? 3 : 0;
        if (row.kcase == 0) throw domain_error("sieve table: bad case tag '" + value + "'");
        return;
    }
    if (field == "gy" && op == "=") {
        std::istringstream in(value);
        std::string piece;
        while (std::getline(in, piece, ','))
            row.gy_set.push_back(mpz_get_ui(parse_amount(piece).get_mpz_t()));
        return;
    }
    if (field == "alpha") { (op == "=") ? row.alpha_eq = ul() : row.alpha_hi = ul(); return; }
    if (field == "beta" && op == "<=") { row.beta_hi = ul(); return; }
    if (field == "z1") { (op == "=") ? row.z1_eq = ul() : row.z1_hi = ul(); return; }
    if (field == "z2") { (op == "=") ? row.z2_eq = ul() : row.z2_hi = ul(); return; }
    if (field == "dz" && op == "=") { row.dz_eq = ul(); row.has_dz = true; return; }
    if (field == "dx") { (op == "=") ? row.dx_eq = ul() : row.dx_lo = ul(); return; }
    if (field == "x1") {
        if (op == "=") row.x1_eq = ul();
        else if (op == ">=") row.x1_lo = ul();
        else row.x1_hi = ul();
        return;
    }
    if (field == "g2") { (op == "=") ? row.g2_eq = ul() : row.g2_lo = ul(); return; }
    if (field == "gx") { (op == "=") ? row.gx_eq = ul() : row.gx_lo = ul(); return; }
    if (field == "gy" && op == ">=") { row.gy_lo = ul(); return; }
    if (op == "<") {
        mpz_class v = parse_amount(value);
        if (field == "a") { row.a_lt = v; return; }
        if (field == "b") { row.b_lt = v; return; }
        if (field == "c") { row.c_lt = v; return; }
        if (field == "cdz") { row.cdz_lt = v; return; }
        if (field == "bdy") { row.bdy_lt = v; return; }
    }
    throw domain_error("sieve table: unsupported row token '" + tok + "'");
}

const std::map<Scenario, ScenarioConfig>& full_config() {
    static const std::map<Scenario, ScenarioConfig> cfg = [] {
        std::map<Scenario, ScenarioConfig> out;
        std::ifstream in(data_file_path("sieve_cases.txt"));
        if (!in) throw domain_error("sieve table: cannot open sieve_cases.txt");
        std::string line;
        Scenario cur = Scenario::cmax_2mod4;
        bool have_section = false;
        while (std::getline(in, line)) {
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            auto toks = split_ws(line);
            if (toks.empty()) continue;
            if (toks[0] == "scenario") {
                auto s = scenario_from_name(toks.at(1));
                if (!s) throw domain_error("sieve table: unknown scenario '" + toks[1] + "'");
                cur = *s;
                have_section = true;
                out[cur];
            } else if (toks[0] == "param") {
                if (!have_section) throw domain_error("sieve table: param before scenario");
                auto eq = toks.at(1).find('=');
                if (eq == std::string::npos) throw domain_error("sieve table: bad param");
                out[cur].params[toks[1].substr(0, eq)] = parse_amount(toks[1].substr(eq + 1));
            } else if (toks[0] == "row") {
                if (!have_section) throw domain_error("sieve table: row before scenario");
                RawRow row;
                for (std::size_t i = 1; i < toks.size(); ++i) apply_row_token(row, toks[i]);
                if (row.id.empty()) throw domain_error("sieve table: row without id");
                out[cur].rows.push_back(std::move(row));
            } else {
                throw domain_error("sieve table: bad directive '" + toks[0] + "'");
            }
        }
        return out;
    }();
    return cfg;
}

const ScenarioConfig& config_for(Scenario s) {
    auto it = full_config().find(s);
    if (it == full_config().end()) throw domain_error("sieve table: no section for scenario");
    return it->second;
}

// ------------------------------------------------------------------
// Shared arithmetic of the case tables

// Compatibility of the odd part g of gcd(x2,y2) with z2, from the settled
// signature arguments: 3 | g forces z2 <= 2, an even z2 forces g in {1,3}
// (g = 1 once z2 > 2), 3 | z2 forces g = 1, and g > 3 forces gcd(z2,6) = 1.
bool g2_z2_ok(unsigned long g, unsigned long z2) {
    if (g % 3 == 0 && g > 1 && z2 > 2) return false;
    if (z2 % 2 == 0 && g != 1 && g != 3) return false;
    if (z2 % 2 == 0 && z2 > 2 && g != 1) return false;
    if (z2 % 3 == 0 && g != 1) return false;
    if (g > 3 && std::gcd(z2, 6ul) != 1) return false;
    return true;
}

// Does the class window [lo, hi] (hi = 0 meaning open) contain a compatible g?
bool g2_class_feasible(unsigned long lo, unsigned long hi, unsigned long z2) {
    unsigned long base = std::max(lo, 1ul);
    if (base % 2 == 0) ++base;
    unsigned long top = hi ? hi : base + 12;
    for (unsigned long g = base; g <= top; g += 2)
        if (g2_z2_ok(g, z2)) return true;
    return false;
}

bool in_window(unsigned long v, unsigned long lo, unsigned long hi) {
    if (lo && v < lo) return false;
    if (hi && v > hi) return false;
    return true;
}

// Caps use 0 for "absent"; intersection keeps that convention.
mpz_class min_cap(const mpz_class& a, const mpz_class& b) {
    if (a == 0) return b;
    if (b == 0) return a;
    return std::min(a, b);
}

mpz_class cap_minus(const mpz_class& cap, long d) {
    return cap == 0 ? mpz_class(0) : mpz_class(cap - d);
}

struct BaseBounds {
    mpz_class a0, b0, c0;
};

bool scenario_is_amax_impl(Scenario s) {
    switch (s) {
        case Scenario::z1_eq_z2_amax:
        case Scenario::amax_dxpos:
        case Scenario::amax_dx0_k3:
        case Scenario::amax_dx0_kne3: return true;
        default: return false;
    }
}

BaseBounds make_base_bounds(Scenario s, unsigned long alpha, unsigned long beta,
                            int min_le7, int first_11) {
    BaseBounds bb;
    mpz_class p = pow2(alpha);
    bb.b0 = (min_le7 == 1) ? mpz_class(3)
                           : std::max(mpz_class(min_le7 == 0 ? 11 : 3), mpz_class(p - 1));
    if (scenario_is_amax_impl(s)) {
        bb.a0 = std::max({mpz_class(19), mpz_class(p + 1), mpz_class(3 * pow2(beta) + 1)});
        bb.c0 = 3 * pow2(beta);
    } else {
        bb.a0 = std::max(mpz_class(11), mpz_class(p + 1));
        if (s == Scenario::cmax_2mod4) {
            bb.c0 = std::max(mpz_class(18), mpz_class(3 * p - 2));
            if (first_11 == 0) bb.c0 = std::max(bb.c0, mpz_class(p * p - p + 2));
        } else {
            bb.c0 = std::max({mpz_class(18), mpz_class(3 * pow2(beta)), mpz_class(p + 2)});
        }
    }
    return bb;
}

unsigned long ceil_div_ul(unsigned long a, unsigned long b) { return (a + b - 1) / b; }

// Largest z with beta*z - 2*log2(z) < alpha + log2(log^2 c_hi / (log a0 log b0)),
// the z-ceiling of the equal-exponent region (a plain two-solution inequality).
// Margins are wide, so a long double scan suffices; everything found inside
// the region is verified exactly afterwards.
unsigned long equal_z_ceiling(unsigned long alpha, unsigned long beta, const mpz_class& a0,
                              const mpz_class& b0, const mpz_class& c_hi) {
    long double lc = logl(mpz_get_d(c_hi.get_mpz_t()));
    long double rhs =
        alpha + log2l(lc * lc / (logl(mpz_get_d(a0.get_mpz_t())) *
                                 logl(mpz_get_d(b0.get_mpz_t()))));
    unsigned long best = 0;
    for (unsigned long z = 1; z <= 500; ++z) {
        long double lhs =
            static_cast<long double>(beta) * z - 2 * log2l(static_cast<long double>(z));
        if (lhs < rhs) best = z;
    }
    return best;
}

// ------------------------------------------------------------------
// Case expansion

bool case_base_ranges_ok(const SieveCase& cs) {
    if (cs.c_cap != 0 && cs.c0 > cs.c_cap) return false;
    if (cs.a_cap != 0 && cs.a0 > cs.a_cap) return false;
    if (cs.b_cap != 0 && cs.b0 > cs.b_cap) return false;
    return true;
}

void expand_cmax_2mod4(const ScenarioConfig& cfg, const SieveCaps& caps,
                       std::vector<SieveCase>& out) {
    for (const auto& row : cfg.rows) {
        unsigned long alo = row.alpha_eq ? row.alpha_eq : 2;
        unsigned long ahi = row.alpha_eq ? row.alpha_eq : (row.alpha_hi ? row.alpha_hi : 60);
        if (row.minb == 1) ahi = std::min(ahi, 3ul);
        for (unsigned long alpha = alo; alpha <= ahi; ++alpha) {
            mpz_class c_cap =
                min_cap(row.c_lt != 0 ? mpz_class(row.c_lt - 1) : mpz_class(0), caps.c);
            BaseBounds bb = make_base_bounds(Scenario::cmax_2mod4, alpha, 1, row.minb, row.first);
            if (c_cap != 0 && (bb.a0 + 1 > c_cap || bb.c0 > c_cap)) continue;
            unsigned long z2lo = row.z2_eq ? row.z2_eq : 2;
            unsigned long z2hi = row.z2_eq ? row.z2_eq : row.z2_hi;
            for (unsigned long z2 = z2lo; z2 <= z2hi; ++z2) {
                if (z2 < alpha) continue; // beta = 1, z2 >= 2 forces z2 >= alpha
                unsigned long glo = row.g2_eq ? row.g2_eq : row.g2_lo;
                unsigned long ghi = row.g2_eq ? row.g2_eq : 0;
                if (!g2_class_feasible(glo, ghi, z2)) continue;
                SieveCase cs;
                cs.scenario = Scenario::cmax_2mod4;
                cs.row_id = row.id;
                cs.alpha = alpha;
                cs.beta = 1;
                cs.z1 = 1;
                cs.z2 = z2;
                cs.first_11 = row.first;
                cs.min_le7 = row.minb;
                cs.g2_lo = glo;
                cs.g2_hi = ghi;
                cs.a0 = bb.a0;
                cs.b0 = bb.b0;
                cs.c0 = bb.c0;
                cs.c_cap = c_cap;
                cs.a_cap = min_cap(cap_minus(c_cap, 1), caps.a);
                cs.b_cap = min_cap(cap_minus(c_cap, 2), caps.b);
                if (case_base_ranges_ok(cs)) out.push_back(std::move(cs));
            }
        }
    }
}

void expand_cmax_0mod4(const ScenarioConfig& cfg, const SieveCaps& caps,
                       std::vector<SieveCase>& out) {
    for (const auto& row : cfg.rows) {
        for (unsigned long beta = 1; beta <= (row.beta_hi ? row.beta_hi : 12); ++beta) {
            unsigned long ahi = row.alpha_hi ? row.alpha_hi : 60;
            if (row.minb == 1) ahi = std::min(ahi, 3ul);
            for (unsigned long alpha = 2; alpha <= ahi; ++alpha) {
                std::vector<std::pair<unsigned long, unsigned long>> zz;
                if (row.z1_eq && row.z2_eq) {
                    zz.emplace_back(row.z1_eq, row.z2_eq);
                } else if (row.has_dz) {
                    for (unsigned long z2 = row.dz_eq + 1; z2 <= row.z2_hi; ++z2)
                        zz.emplace_back(z2 - row.dz_eq, z2);
                }
                for (auto [z1, z2] : zz) {
                    if (beta == 1 && z1 == 1) continue; // that branch is c = 2 (mod 4)
                    if (beta * z1 < alpha || beta * z2 < alpha) continue;
                    unsigned long glo = row.g2_eq ? row.g2_eq : row.g2_lo;
                    unsigned long ghi = row.g2_eq ? row.g2_eq : 0;
                    if (!g2_class_feasible(glo, ghi, z2)) continue;
                    BaseBounds bb =
                        make_base_bounds(Scenario::cmax_0mod4, alpha, beta, row.minb, -1);
                    SieveCase cs;
                    cs.scenario = Scenario::cmax_0mod4;
                    cs.row_id = row.id;
                    cs.alpha = alpha;
                    cs.beta = beta;
                    cs.z1 = z1;
                    cs.z2 = z2;
                    cs.min_le7 = row.minb;
                    cs.g2_lo = glo;
                    cs.g2_hi = ghi;
                    cs.a0 = bb.a0;
                    cs.b0 = bb.b0;
                    cs.c0 = bb.c0;
                    cs.c_cap = min_cap(
                        row.c_lt != 0 ? mpz_class(row.c_lt - 1) : mpz_class(0), caps.c);
                    cs.a_cap = min_cap(cap_minus(cs.c_cap, 1), caps.a);
                    cs.b_cap = min_cap(cap_minus(cs.c_cap, 2), caps.b);
                    if (case_base_ranges_ok(cs)) out.push_back(std::move(cs));
                }
            }
        }
    }
}

void expand_amax_dxpos(const ScenarioConfig& cfg, const SieveCaps& caps,
                       std::vector<SieveCase>& out) {
    mpz_class c_all = cfg.params.at("c_all") - 1;
    unsigned long dz_max = mpz_get_ui(cfg.params.at("dz_max").get_mpz_t());
    unsigned long dx_max = mpz_get_ui(cfg.params.at("dx_max").get_mpz_t());
    for (const auto& row : cfg.rows) {
        for (unsigned long beta = 1; beta <= (row.beta_hi ? row.beta_hi : 12); ++beta) {
            unsigned long ahi = row.alpha_hi ? row.alpha_hi : 60;
            if (row.minb == 1) ahi = std::min(ahi, 3ul);
            for (unsigned long alpha = 2; alpha <= ahi; ++alpha) {
                for (unsigned long z1 = std::max(2ul, ceil_div_ul(alpha, beta));
                     z1 <= row.z1_hi; ++z1) {
                    if (row.dx_eq == 1 && beta * z1 != alpha) continue;
                    for (unsigned long z2 = z1 + 1;
                         z2 <= std::min(row.z2_hi, z1 + dz_max); ++z2) {
                        BaseBounds bb =
                            make_base_bounds(Scenario::amax_dxpos, alpha, beta, row.minb, -1);
                        SieveCase cs;
                        cs.scenario = Scenario::amax_dxpos;
                        cs.row_id = row.id;
                        cs.alpha = alpha;
                        cs.beta = beta;
                        cs.z1 = z1;
                        cs.z2 = z2;
                        cs.min_le7 = row.minb;
                        cs.k3 = row.k;
                        cs.a0 = bb.a0;
                        cs.b0 = bb.b0;
                        cs.c0 = bb.c0;
                        cs.a_cap = min_cap(
                            row.a_lt != 0 ? mpz_class(row.a_lt - 1) : mpz_class(0), caps.a);
                        cs.c_cap = min_cap(min_cap(row.c_lt != 0 ? mpz_class(row.c_lt - 1) : mpz_class(0), c_all),
                                           min_cap(cap_minus(cs.a_cap, 1), caps.c));
                        cs.b_cap = min_cap(cap_minus(cs.a_cap, 2), caps.b);
                        if (row.k == 1) {
                            cs.dx_min = row.dx_eq ? row.dx_eq : std::max(row.dx_lo, 1ul);
                            cs.dx_max = row.dx_eq ? row.dx_eq : dx_max;
                            cs.gx_lo = row.gx_eq ? row.gx_eq : row.gx_lo;
                            cs.gx_hi = row.gx_eq ? row.gx_eq : 0;
                        }
                        if (case_base_ranges_ok(cs)) out.push_back(std::move(cs));
                    }
                }
            }
        }
    }
}

void expand_amax_dx0_k3(const ScenarioConfig& cfg, const SieveCaps& caps,
                        std::vector<SieveCase>& out) {
    for (const auto& row : cfg.rows) {
        for (unsigned long beta = 1; beta <= row.beta_hi; ++beta) {
            for (unsigned long alpha = 2; alpha <= row.alpha_hi; ++alpha) {
                for (unsigned long z1 = std::max(2ul, ceil_div_ul(alpha, beta));
                     z1 <= row.z1_hi; ++z1) {
                    for (unsigned long z2 = z1 + 1; z2 <= row.z2_hi; ++z2) {
                        unsigned long glo = row.g2_eq ? row.g2_eq : row.g2_lo;
                        unsigned long ghi = row.g2_eq ? row.g2_eq : 0;
                        if (!g2_class_feasible(glo, ghi, z2)) continue;
                        BaseBounds bb =
                            make_base_bounds(Scenario::amax_dx0_k3, alpha, beta, -1, -1);
                        SieveCase cs;
                        cs.scenario = Scenario::amax_dx0_k3;
                        cs.row_id = row.id;
                        cs.alpha = alpha;
                        cs.beta = beta;
                        cs.z1 = z1;
                        cs.z2 = z2;
                        cs.k3 = 1;
                        cs.g2_lo = glo;
                        cs.g2_hi = ghi;
                        cs.a0 = bb.a0;
                        cs.b0 = bb.b0;
                        cs.c0 = bb.c0;
                        cs.a_cap = min_cap(row.a_lt != 0 ? mpz_class(row.a_lt - 1) : mpz_class(0), caps.a);
                        cs.c_cap = min_cap(row.c_lt != 0 ? mpz_class(row.c_lt - 1) : mpz_class(0),
                                           min_cap(cap_minus(cs.a_cap, 1), caps.c));
                        cs.b_cap = min_cap(cap_minus(cs.a_cap, 2), caps.b);
                        if (cs.c_cap == 0) continue; // no finite c-range to scan
                        if (case_base_ranges_ok(cs)) out.push_back(std::move(cs));
                    }
                }
            }
        }
    }
}

void expand_amax_dx0_kne3(const ScenarioConfig& cfg, const SieveCaps& caps,
                          std::vector<SieveCase>& out) {
    for (const auto& row : cfg.rows) {
        for (unsigned long beta = 1; beta <= row.beta_hi; ++beta) {
            for (unsigned long alpha = 2; alpha <= row.alpha_hi; ++alpha) {
                for (unsigned long z1 = std::max(2ul, ceil_div_ul(alpha, beta));
                     z1 <= row.z1_hi; ++z1) {
                    for (unsigned long z2 = z1 + 1; z2 <= row.z2_hi; ++z2) {
                        if (row.g2_eq || row.g2_lo) {
                            unsigned long glo = row.g2_eq ? row.g2_eq : row.g2_lo;
                            unsigned long ghi = row.g2_eq ? row.g2_eq : 0;
                            if (!g2_class_feasible(glo, ghi, z2)) continue;
                        }
                        BaseBounds bb =
                            make_base_bounds(Scenario::amax_dx0_kne3, alpha, beta, -1, -1);
                        SieveCase cs;
                        cs.scenario = Scenario::amax_dx0_kne3;
                        cs.row_id = row.id;
                        cs.alpha = alpha;
                        cs.beta = beta;
                        cs.z1 = z1;
                        cs.z2 = z2;
                        cs.k3 = 0;
                        cs.kne3_case = row.kcase;
                        cs.g2_lo = row.g2_eq ? row.g2_eq : row.g2_lo;
                        cs.g2_hi = row.g2_eq ? row.g2_eq : 0;
                        cs.gy_set = row.gy_set;
                        cs.gy_lo = row.gy_lo;
                        cs.x1_min = row.x1_eq ? row.x1_eq : std::max(row.x1_lo, 1ul);
                        cs.x1_max = row.x1_eq ? row.x1_eq : row.x1_hi;
                        cs.a0 = bb.a0;
                        cs.b0 = bb.b0;
                        cs.c0 = bb.c0;
                        cs.a_cap = min_cap(row.a_lt != 0 ? mpz_class(row.a_lt - 1) : mpz_class(0), caps.a);
                        cs.b_cap = min_cap(row.b_lt != 0 ? mpz_class(row.b_lt - 1) : mpz_class(0),
                                           min_cap(cap_minus(cs.a_cap, 2), caps.b));
                        cs.c_cap = min_cap(row.c_lt != 0 ? mpz_class(row.c_lt - 1) : mpz_class(0),
                                           min_cap(cap_minus(cs.a_cap, 1), caps.c));
                        cs.cdz_cap = row.cdz_lt != 0 ? mpz_class(row.cdz_lt - 1) : mpz_class(0);
                        cs.bdy_cap = row.bdy_lt != 0 ? mpz_class(row.bdy_lt - 1) : mpz_class(0);
                        if (cs.cdz_cap != 0)
                            cs.c_cap = min_cap(cs.c_cap, floor_root(cs.cdz_cap, z2 - z1));
                        // Case (ii) has c^{z2-z1} < b^{|y1-y2|}, so the b^{dy}
                        // cap bounds c as well.
                        if (cs.kne3_case == 2 && cs.bdy_cap != 0)
                            cs.c_cap = min_cap(cs.c_cap, floor_root(cs.bdy_cap, z2 - z1));
                        if (case_base_ranges_ok(cs)) out.push_back(std::move(cs));
                    }
                }
            }
        }
    }
}

void expand_equal_z(Scenario s, const ScenarioConfig& cfg, const SieveCaps& caps,
                    std::vector<SieveCase>& out) {
    const bool amax = (s == Scenario::z1_eq_z2_amax);
    mpz_class Mc = min_cap(cfg.params.at("Mc"), caps.c);
    if (amax) Mc = min_cap(Mc, cap_minus(caps.a, 1));
    if (Mc < 18) return;
    // The alpha range depends on the b-ceiling, which depends on the per-case
    // c-ceiling; iterate until the expansion is stable (it only shrinks).
    mpz_class Mb = amax ? min_cap(cfg.params.at("Mb"), min_cap(caps.b, cap_minus(caps.a, 2)))
                        : min_cap(Mc, caps.b);
    for (int pass = 0; pass < 4; ++pass) {
        std::vector<SieveCase> got;
        mpz_class max_b_seen = 0;
        unsigned long beta_hi = max_exp(2, Mc / 3);
        for (unsigned long beta = 1; beta <= beta_hi; ++beta) {
            unsigned long alpha_hi = std::max<unsigned long>(2, max_exp(2, Mb + 1));
            for (unsigned long alpha = 2; alpha <= alpha_hi; ++alpha) {
                BaseBounds bb = make_base_bounds(s, alpha, beta, -1, -1);
                unsigned long zcap = equal_z_ceiling(alpha, beta, bb.a0, bb.b0, Mc);
                unsigned long zlo = amax ? std::max(2ul, ceil_div_ul(alpha, beta))
                                         : std::max(1ul, ceil_div_ul(alpha, beta));
                for (unsigned long z1 = 1; z1 <= std::max(zcap, 1ul); ++z1) {
                    bool in_region = (z1 >= zlo && z1 <= zcap);
                    if (!amax && beta == 1 && z1 == 1) in_region = true;
                    if (!in_region) continue;
                    SieveCase cs;
                    cs.scenario = s;
                    cs.row_id = "region";
                    cs.alpha = alpha;
                    cs.beta = beta;
                    cs.z1 = z1;
                    cs.z2 = z1;
                    cs.a0 = bb.a0;
                    cs.b0 = bb.b0;
                    cs.c0 = bb.c0;
                    if (amax) {
                        cs.a_cap = caps.a;
                        cs.c_cap = Mc;
                        cs.b_cap = Mb;
                    } else {
                        // Growth ceiling from c^{z1/2} < z1^2 H(c), intersected
                        // with the scenario cap and anything the caller set.
                        BoundContext ctx;
                        ctx.alpha = alpha;
                        ctx.beta = beta;
                        ctx.m2_base = mpz_get_ui(cfg.params.at("m2_base").get_mpz_t());
                        ctx.g = 1;
                        ctx.a0 = bb.a0;
                        ctx.b0 = bb.b0;
                        ctx.c0 = bb.c0;
                        mpz_class cross = base_cap_crossover(
                            ctx, static_cast<Real>(z1) * static_cast<Real>(z1),
                            static_cast<unsigned>(z1), 2);
                        cs.c_cap = min_cap(cross, Mc);
                        if (cs.c_cap < cs.c0) continue;
                        cs.a_cap = min_cap(
                            min_cap(floor_root_rat(pow_of(cs.c_cap, z1), 1, 2),
                                    cs.c_cap - 1),
                            caps.a);
                        cs.b_cap = min_cap(
                            min_cap(floor_root_rat(pow_of(cs.c_cap, z1), 1, 4),
                                    cap_minus(cs.a_cap, 2)),
                            Mb);
                    }
                    if (case_base_ranges_ok(cs)) {
                        max_b_seen = std::max(max_b_seen, cs.b_cap);
                        got.push_back(std::move(cs));
                    }
                }
            }
        }
        if (!amax && max_b_seen != 0 && max_b_seen < Mb) {
            Mb = max_b_seen;
            out = std::move(got);
            continue;
        }
        out = std::move(got);
        break;
    }
}

} // namespace

// ------------------------------------------------------------------
// Public: names, params, table

std::optional<Scenario> scenario_from_name(const std::string& name) {
    for (Scenario s : all_scenarios())
        if (scenario_name(s) == name) return s;
    return std::nullopt;
}

std::string scenario_name(Scenario s) {
    switch (s) {
        case Scenario::z1_eq_z2_cmax: return "z1-eq-z2-cmax";
        case Scenario::z1_eq_z2_amax: return "z1-eq-z2-amax";
        case Scenario::cmax_2mod4: return "cmax-2mod4";
        case Scenario::cmax_0mod4: return "cmax-0mod4";
        case Scenario::amax_dxpos: return "amax-dxpos";
        case Scenario::amax_dx0_k3: return "amax-dx0-k3";
        case Scenario::amax_dx0_kne3: return "amax-dx0-kne3";
    }
    throw domain_error("scenario_name: bad enum value");
}

const std::vector<Scenario>& all_scenarios() {
    static const std::vector<Scenario> v = {
        Scenario::z1_eq_z2_cmax, Scenario::z1_eq_z2_amax,  Scenario::cmax_2mod4,
        Scenario::cmax_0mod4,    Scenario::amax_dxpos,     Scenario::amax_dx0_k3,
        Scenario::amax_dx0_kne3,
    };
    return v;
}

const std::map<std::string, mpz_class>& scenario_params(Scenario s) {
    return config_for(s).params;
}

std::vector<SieveCase> build_case_table(Scenario s, const SieveCaps& caps) {
    const ScenarioConfig& cfg = config_for(s);
    std::vector<SieveCase> out;
    switch (s) {
        case Scenario::cmax_2mod4: expand_cmax_2mod4(cfg, caps, out); break;
        case Scenario::cmax_0mod4: expand_cmax_0mod4(cfg, caps, out); break;
        case Scenario::amax_dxpos: expand_amax_dxpos(cfg, caps, out); break;
        case Scenario::amax_dx0_k3: expand_amax_dx0_k3(cfg, caps, out); break;
        case Scenario::amax_dx0_kne3: expand_amax_dx0_kne3(cfg, caps, out); break;
        case Scenario::z1_eq_z2_cmax:
        case Scenario::z1_eq_z2_amax: expand_equal_z(s, cfg, caps, out); break;
    }
    return out;
}

// ------------------------------------------------------------------
// Candidate generation

namespace {

void tally(PruneCounters* pc, const char* key, unsigned long long n = 1) {
    if (pc) (*pc)[key] += n;
}

// Representative b for the pair filters' small-b clauses: any value below 11
// engages them, 11 and up disables them. Engage only when the case pins b <= 7.
mpz_class filter_b_rep(const SieveCase& cs) { return cs.min_le7 == 1 ? 3 : 11; }

// The four base-window cases of the c = 2 (mod 4) scenario, as exponent
// feasibility tests. The t-limits are max exponents of the base floor against
// 2^{z2} resp. 2^{z2 - 1}.
unsigned red2_feasible_mask(const SieveCase& cs, unsigned long x1, unsigned long y1,
                            unsigned long x2, unsigned long y2) {
    const long z2 = static_cast<long>(cs.z2);
    const long t1 = static_cast<long>(max_exp(cs.a0, pow2(cs.z2)));
    const long t2 = static_cast<long>(max_exp(cs.b0, pow2(cs.z2 - 1)));
    const long t3 = t1;
    const long t4 = static_cast<long>(max_exp(cs.a0, pow2(cs.z2 - 1)));
    const long t5 = t4;
    const long t6 = static_cast<long>(max_exp(cs.b0, pow2(cs.z2)));
    const long X1 = static_cast<long>(x1), Y1 = static_cast<long>(y1);
    const long X2 = static_cast<long>(x2), Y2 = static_cast<long>(y2);
    unsigned mask = 0;
    // (i) a^{x2} > b^{y2} and a^{x1} > b^{y1}
    if (long e = X2 - X1 * z2; e >= 1 && e <= t1) mask |= 1u;
    // (ii) a^{x2} > b^{y2} and a^{x1} < b^{y1}
    if (Y1 > X1 && X1 * Y2 < X2 * Y1 && X2 - X1 * z2 >= 1 && Y2 - Y1 * z2 <= t2 &&
        X2 - Y1 * z2 <= t3)
        mask |= 2u;
    // (iii) a^{x2} < b^{y2} and a^{x1} > b^{y1}
    if (Y2 > X2 && X1 * Y2 > X2 * Y1 && Y2 - Y1 * z2 >= 1 && Y2 >= X1 * z2 &&
        X2 - X1 * z2 <= t4)
        mask |= 4u;
    // (iv) both <
    if (Y2 > X2 && Y1 > X1 && Y2 - X1 * z2 >= 1 && X2 - Y1 * z2 <= t5 &&
        Y2 - Y1 * z2 >= 2 && Y2 - Y1 * z2 <= t6)
        mask |= 8u;
    return mask;
}

// Supplemental cap on b for first-solution (1,1) rows with min{a,b} > 7 in
// window case (iii); 0 = infeasible there, -1 = no extra cap applies.
long supplement_b_cap(unsigned long x2, unsigned long y2) {
    switch (std::min(x2, y2)) {
        case 7: return 13;
        case 6: return 21;
        case 5: return 45;
        case 4: return 181;
        default: return std::min(x2, y2) > 7 ? 0 : -1;
    }
}

bool dx_window_ok(const SieveCase& cs, unsigned long x1, unsigned long x2) {
    if (cs.dx_min == 0 && cs.dx_max == 0) return true;
    unsigned long dx = x1 > x2 ? x1 - x2 : x2 - x1;
    return in_window(dx, cs.dx_min, cs.dx_max);
}

bool gx_window_ok(const SieveCase& cs, unsigned long x1, unsigned long y1, unsigned long x2,
                  unsigned long y2) {
    if (cs.gx_lo == 0 && cs.gx_hi == 0) return true;
    // gcd(y_j, z_j) at the slot carrying the larger of x1, x2.
    unsigned long g = (x2 >= x1) ? std::gcd(y2, cs.z2) : std::gcd(y1, cs.z1);
    return in_window(g, cs.gx_lo, cs.gx_hi);
}

bool g2_candidate_ok(const SieveCase& cs, unsigned long x2, unsigned long y2) {
    unsigned long g = odd_part_ul(std::gcd(x2, y2));
    return in_window(g, cs.g2_lo, cs.g2_hi) && g2_z2_ok(g, cs.z2);
}

bool two_adic_ok(const SieveCase& cs, unsigned long x1, unsigned long y1, unsigned long x2,
                 unsigned long y2) {
    if (cs.beta * cs.z1 <= cs.alpha) return true;
    long cross = static_cast<long>(x1) * static_cast<long>(y2) -
                 static_cast<long>(x2) * static_cast<long>(y1);
    if (cross == 0) return false; // the pair filters reject this shape anyway
    unsigned long need = cs.beta * cs.z1 - cs.alpha;
    return nu2(mpz_class(cross < 0 ? -cross : cross)) >= need;
}

void gen_cmax_2mod4(const SieveCase& cs, PruneCounters* pc, std::vector<CandidateTuple>& out) {
    unsigned long x1_hi = cs.first_11 == 1 ? 1 : max_exp(cs.a0, cs.c_cap);
    unsigned long y1_hi = cs.first_11 == 1 ? 1 : max_exp(cs.b0, cs.c_cap);
    mpz_class cz2 = pow_of(cs.c_cap, cs.z2);
    unsigned long x2_hi = max_exp(cs.a0, cz2);
    unsigned long y2_hi = max_exp(cs.b0, cz2);
    mpz_class b_rep = filter_b_rep(cs);
    for (unsigned long x2 = 1; x2 <= x2_hi; ++x2) {
        for (unsigned long y2 = 1; y2 <= y2_hi; ++y2) {
            if (!g2_candidate_ok(cs, x2, y2)) {
                tally(pc, "g2-arithmetic");
                continue;
            }
            if (signature_rules_out(x2, y2, cs.z2)) {
                tally(pc, "settled-signature");
                continue;
            }
            for (unsigned long x1 = 1; x1 <= x1_hi; ++x1) {
                for (unsigned long y1 = 1; y1 <= y1_hi; ++y1) {
                    if (cs.first_11 == 0 && x1 == 1 && y1 == 1) continue;
                    Sys2Candidate sc{x1, y1, x2, y2, cs.z2};
                    if (!red1_filter(sc, b_rep)) {
                        tally(pc, "pair-filter");
                        continue;
                    }
                    unsigned mask = red2_feasible_mask(cs, x1, y1, x2, y2);
                    if (cs.first_11 == 1) mask &= 0x5u; // (ii), (iv) need y1 > x1
                    if ((mask & 4u) && cs.first_11 == 1 && cs.min_le7 == 0 &&
                        supplement_b_cap(x2, y2) == 0)
                        mask &= ~4u;
                    if (mask == 0) {
                        tally(pc, "case-window");
                        continue;
                    }
                    CandidateTuple t;
                    t.x1 = x1; t.y1 = y1; t.x2 = x2; t.y2 = y2;
                    t.z1 = 1; t.z2 = cs.z2;
                    t.red2_mask = mask;
                    out.push_back(t);
                }
            }
        }
    }
}

// Shared exponent-stage generator for the scenarios with 4 | c^{z1}. Parities
// and base signatures run over the admissible parity/signature rows.
void gen_parsig_style(const SieveCase& cs, PruneCounters* pc, std::vector<CandidateTuple>& out) {
    const bool equal_x = (cs.scenario == Scenario::amax_dx0_k3);
    const bool amax = scenario_is_amax_impl(cs.scenario);
    mpz_class cz1 = pow_of(cs.c_cap, cs.z1), cz2 = pow_of(cs.c_cap, cs.z2);
    unsigned long x1_hi = amax ? cs.z1 - 1 : max_exp(cs.a0, cz1);
    unsigned long x2_hi = amax ? cs.z2 - 1 : max_exp(cs.a0, cz2);
    unsigned long y1_hi = max_exp(cs.b0, cz1);
    unsigned long y2_hi = max_exp(cs.b0, cz2);
    if (cs.scenario == Scenario::cmax_0mod4) {
        // Sizes below c resp. c^2 are impossible here, so the first solution
        // needs x1, y1 >= 2 and the second x2, y2 >= 3.
        if (x1_hi < 2 || y1_hi < 2 || x2_hi < 3 || y2_hi < 3) return;
    }
    mpz_class b_rep = filter_b_rep(cs);
    for (const auto& row : parsig_table()) {
        if (equal_x && row.px1 != row.px2) continue;
        int a4 = row.sa > 0 ? 1 : 3, b4 = row.sb > 0 ? 1 : 3;
        auto start = [](int parity) { return parity == 1 ? 1ul : 2ul; };
        for (unsigned long x1 = start(row.px1); x1 <= x1_hi; x1 += 2) {
            if (cs.scenario == Scenario::cmax_0mod4 && x1 < 2) continue;
            if (x1 < cs.x1_min || (cs.x1_max && x1 > cs.x1_max)) continue;
            for (unsigned long y1 = start(row.py1); y1 <= y1_hi; y1 += 2) {
                if (cs.scenario == Scenario::cmax_0mod4 && y1 < 2) continue;
                for (unsigned long x2 = equal_x ? x1 : start(row.px2);
                     x2 <= (equal_x ? x1 : x2_hi); x2 += 2) {
                    if (cs.scenario == Scenario::cmax_0mod4 && x2 < 3) continue;
                    if (!equal_x && !dx_window_ok(cs, x1, x2)) {
                        tally(pc, "dx-window");
                        continue;
                    }
                    if (cs.scenario == Scenario::amax_dxpos && x1 == x2) continue;
                    for (unsigned long y2 = start(row.py2); y2 <= y2_hi; y2 += 2) {
                        if (cs.scenario == Scenario::cmax_0mod4 && y2 < 3) continue;
                        if (equal_x && y2 <= y1) continue;
                        if (cs.kne3_case == 1 && y1 > y2) continue;
                        if (cs.kne3_case == 2 && (y1 > y2 || y2 - y1 < 2)) continue;
                        if (cs.kne3_case == 3 &&
                            (y1 <= y2 || x1 >= x2 || y1 <= cs.z1)) continue;
                        if (!g2_candidate_ok(cs, x2, y2)) {
                            tally(pc, "g2-arithmetic");
                            continue;
                        }
                        if (cs.kne3_case == 2) {
                            unsigned long gy = std::gcd(x2, cs.z2);
                            bool ok = cs.gy_set.empty()
                                          ? (cs.gy_lo == 0 || gy >= cs.gy_lo)
                                          : std::find(cs.gy_set.begin(), cs.gy_set.end(),
                                                      gy) != cs.gy_set.end();
                            if (!ok) {
                                tally(pc, "gy-window");
                                continue;
                            }
                        }
                        if (!gx_window_ok(cs, x1, y1, x2, y2)) {
                            tally(pc, "gx-window");
                            continue;
                        }
                        Sys12Candidate sc{x1, y1, cs.z1, x2, y2, cs.z2};
                        if (!red5_filter(sc, a4, b4, b_rep)) {
                            tally(pc, "pair-filter");
                            continue;
                        }
                        if (!two_adic_ok(cs, x1, y1, x2, y2)) {
                            tally(pc, "2-adic");
                            continue;
                        }
                        if (signature_rules_out(x2, y2, cs.z2)) {
                            tally(pc, "settled-signature");
                            continue;
                        }
                        CandidateTuple t;
                        t.x1 = x1; t.y1 = y1; t.x2 = x2; t.y2 = y2;
                        t.z1 = cs.z1; t.z2 = cs.z2;
                        t.sa = row.sa; t.sb = row.sb;
                        out.push_back(t);
                    }
                }
            }
        }
    }
}

// Grid size of the exponent stage before filtering; used to refuse cases
// that would not terminate on a desk machine without tighter caps.
double candidate_grid_size(const SieveCase& cs) {
    const bool amax = scenario_is_amax_impl(cs.scenario);
    mpz_class cz1 = pow_of(cs.c_cap, cs.z1), cz2 = pow_of(cs.c_cap, cs.z2);
    double x1n = amax ? cs.z1 - 1 : max_exp(cs.a0, cz1);
    double x2n = amax ? cs.z2 - 1 : max_exp(cs.a0, cz2);
    double y1n = max_exp(cs.b0, cz1);
    double y2n = max_exp(cs.b0, cz2);
    return std::max(1.0, x1n) * std::max(1.0, x2n) * std::max(1.0, y1n) *
           std::max(1.0, y2n) * 12.0 / 16.0;
}

} // namespace

std::vector<CandidateTuple> generate_candidates(const SieveCase& cs, PruneCounters* pruned) {
    std::vector<CandidateTuple> out;
    switch (cs.scenario) {
        case Scenario::cmax_2mod4:
            gen_cmax_2mod4(cs, pruned, out);
            break;
        case Scenario::cmax_0mod4:
            // The brute-force and small-exponent stages enumerate bases
            // directly; only the main stage works from exponent tuples.
            if (cs.z2 - cs.z1 == 1 && cs.z2 >= 4 && cs.c_cap >= 1000)
                gen_parsig_style(cs, pruned, out);
            break;
        case Scenario::amax_dxpos:
        case Scenario::amax_dx0_k3:
        case Scenario::amax_dx0_kne3:
            gen_parsig_style(cs, pruned, out);
            break;
        case Scenario::z1_eq_z2_cmax:
        case Scenario::z1_eq_z2_amax:
            break; // base-first enumeration; see the driver
    }
    return out;
}

// ------------------------------------------------------------------
// Windows, congruences, structural filters, final equations

BaseInterval base_interval(IntervalKind kind, const SieveCase& cs, const CandidateTuple& t,
                           const mpz_class& b, const mpz_class& lo0, const mpz_class& hi0) {
    BaseInterval iv;
    iv.lo = lo0;
    iv.hi = hi0;
    const unsigned long x1 = t.x1, y1 = t.y1, x2 = t.x2, y2 = t.y2;
    const unsigned long z1 = t.z1, z2 = t.z2;
    mpz_class a1 = std::max(cs.a0, mpz_class(b + 2));
    switch (kind) {
        case IntervalKind::red2_i: {
            long e = static_cast<long>(x2) - static_cast<long>(x1) * static_cast<long>(z2);
            if (e < 1) { iv.hi = iv.lo - 1; return iv; }
            iv.lo = std::max(iv.lo, a1);
            iv.hi = std::min(iv.hi, floor_root(pow2(z2), static_cast<unsigned long>(e)));
            break;
        }
        case IntervalKind::red2_ii: {
            mpz_class byz = pow_of(b, y1 * z2);
            iv.lo = std::max({iv.lo, a1, mpz_class(floor_root_rat(byz, 2, x2) + 1)});
            iv.hi = std::min({iv.hi, floor_root(pow2(z2) * byz, x2),
                              floor_root(pow_of(b, y1), x1)});
            break;
        }
        case IntervalKind::red2_iii: {
            mpz_class by2 = pow_of(b, y2);
            iv.lo = std::max({iv.lo, a1,
                              mpz_class(floor_root_rat(by2, pow2(z2), x1 * z2) + 1)});
            iv.hi = std::min({iv.hi, floor_root(2 * by2, x1 * z2), floor_root(by2, x2)});
            break;
        }
        case IntervalKind::red2_iv: {
            iv.lo = std::max(iv.lo, a1);
            iv.hi = std::min({iv.hi, floor_root(pow_of(b, y1), x1),
                              floor_root(pow_of(b, y2), x2)});
            break;
        }
        case IntervalKind::assu8:
        case IntervalKind::assu14: {
            // x1 < x2 region: sandwich around b^{y1 z2 / (x2 z1)}.
            mpz_class c_ref = cs.c0;
            if (kind == IntervalKind::assu8)
                c_ref = std::max(std::max(cs.c0, mpz_class(1000)), mpz_class(b + 2));
            mpz_class byz = pow_of(b, y1 * z2);
            mpz_class ax = pow_of(a1, x1);
            iv.lo = std::max({iv.lo, a1,
                              ceil_root_rat(byz * pow_of(ax, z1), pow_of(ax + 1, z1),
                                            x2 * z1)});
            iv.hi = std::min(iv.hi, floor_root_rat(pow_of(c_ref + 1, z2) * byz,
                                                   pow_of(c_ref, z2), x2 * z1));
            break;
        }
        case IntervalKind::red9: {
            // y1 < y2, x1 >= x2 region, c > max form.
            mpz_class c_ref = std::max(std::max(cs.c0, mpz_class(1000)), mpz_class(b + 2));
            mpz_class byz = pow_of(b, y2 * z1);
            mpz_class ax = pow_of(a1, x2);
            iv.lo = std::max({iv.lo, a1,
                              ceil_root_rat(byz * pow_of(ax, z2), pow_of(ax + 1, z2),
                                            x1 * z2)});
            iv.hi = std::min(iv.hi, floor_root_rat(pow_of(c_ref + 1, z1) * byz,
                                                   pow_of(c_ref, z1), x1 * z2));
            break;
        }
        case IntervalKind::assu15: {
            // y1 < y2, x1 >= x2 region, a > max form.
            mpz_class byz = pow_of(b, y2 * z1);
            mpz_class by1 = pow_of(b, y1);
            iv.lo = std::max({iv.lo, a1,
                              ceil_root_rat(byz * pow_of(cs.c0, z2), pow_of(cs.c0 + 1, z2),
                                            x1 * z2)});
            iv.hi = std::min(iv.hi, floor_root_rat(pow_of(by1 + 1, z1) * byz,
                                                   pow_of(by1, z1), x1 * z2));
            break;
        }
    }
    return iv;
}

bool congruence_sieve(const SieveCase& cs, const CandidateTuple& t, const mpz_class& a,
                      const mpz_class& b, const mpz_class& c) {
    auto pow_cong_one = [](const mpz_class& base, unsigned long e, const mpz_class& mod) {
        if (mod <= 2) return true;
        return mod_pow(base, e, mod) == 1;
    };
    auto labs_ul = [](long v) { return static_cast<unsigned long>(v < 0 ? -v : v); };
    switch (cs.scenario) {
        case Scenario::cmax_2mod4: {
            if (a == 0 || b == 0) return true;
            long e_a = static_cast<long>(t.x1) * static_cast<long>(t.z2) -
                       static_cast<long>(t.x2);
            long e_b = static_cast<long>(t.y1) * static_cast<long>(t.z2) -
                       static_cast<long>(t.y2);
            bool ok = true;
            if (e_a != 0)
                ok = ok && pow_cong_one(a, labs_ul(e_a), 2 * pow_of(b, std::min(t.y1, t.y2)));
            if (ok && e_b != 0)
                ok = ok && pow_cong_one(b, labs_ul(e_b), 2 * pow_of(a, std::min(t.x1, t.x2)));
            return ok;
        }
        case Scenario::z1_eq_z2_cmax:
        case Scenario::z1_eq_z2_amax: {
            if (a == 0 || b == 0) return true;
            if (t.y1 <= t.y2 || t.x2 <= t.x1) return true; // canonical form only
            return pow_cong_one(b, t.y1 - t.y2, pow_of(a, t.x1)) &&
                   pow_cong_one(a, t.x2 - t.x1, pow_of(b, t.y2));
        }
        case Scenario::amax_dx0_k3: {
            if (b == 0 || c == 0) return true;
            return pow_cong_one(c, t.z2 - t.z1, pow_of(b, t.y1)) &&
                   pow_cong_one(b, t.y2 - t.y1, pow_of(c, t.z1));
        }
        case Scenario::amax_dx0_kne3: {
            if (a == 0 || b == 0 || c == 0) return true;
            unsigned long dz = t.z2 - t.z1;
            mpz_class mod = pow_of(a, std::min(t.x1, t.x2));
            if (mod <= 2) return true;
            if (t.y1 > t.y2) {
                mpz_class r = mod_pow(b, t.y1 - t.y2, mod) * mod_pow(c, dz, mod) % mod;
                return r == 1;
            }
            return mod_pow(b, t.y2 - t.y1, mod) == mod_pow(c, dz, mod);
        }
        case Scenario::cmax_0mod4:
        case Scenario::amax_dxpos: {
            if (a == 0 || b == 0) return true;
            // (a^{x1} + b^{y1})^{z2} = (a^{x2} + b^{y2})^{z1}, taken modulo
            // b^{min y} and a^{min x}.
            long e_a = static_cast<long>(t.x1) * static_cast<long>(t.z2) -
                       static_cast<long>(t.x2) * static_cast<long>(t.z1);
            long e_b = static_cast<long>(t.y1) * static_cast<long>(t.z2) -
                       static_cast<long>(t.y2) * static_cast<long>(t.z1);
            bool ok = true;
            if (e_a != 0)
                ok = ok && pow_cong_one(a, labs_ul(e_a), pow_of(b, std::min(t.y1, t.y2)));
            if (ok && e_b != 0)
                ok = ok && pow_cong_one(b, labs_ul(e_b), pow_of(a, std::min(t.x1, t.x2)));
            return ok;
        }
    }
    return true;
}

FilterOutcome structural_filters(const SieveCase& cs, const CandidateTuple& t,
                                 const mpz_class& a, const mpz_class& b, const mpz_class& c) {
    if (a <= 0 || b <= 0 || c <= 0)
        throw domain_error("structural_filters: all bases must be known");
    FilterOutcome fo;
    auto fail = [&](std::string reason) {
        fo.pass = false;
        fo.reason = std::move(reason);
        return fo;
    };
    if (t.z1 < t.z2 && t.x1 >= t.x2 && t.y1 >= t.y2)
        return fail("x1 < x2 or y1 < y2 is forced");
    if (cs.scenario == Scenario::cmax_0mod4 && t.z2 - t.z1 == 1 && t.z2 >= 4 && c >= 1000) {
        if (pow_of(a, t.x1) < c || pow_of(b, t.y1) < c)
            return fail("min{a^{x1}, b^{y1}} >= c fails");
        mpz_class c2 = c * c;
        if (pow_of(a, t.x2) < c2 || pow_of(b, t.y2) < c2)
            return fail("min{a^{x2}, b^{y2}} >= c^2 fails");
    }
    if (cs.scenario == Scenario::amax_dxpos) {
        unsigned long dz = t.z2 - t.z1;
        if (dz >= 2 && t.z1 < 2 * dz)
            return fail("z1 < 2(z2 - z1)");
        if (dz >= 2 && t.z1 >= 2 * dz) {
            mpz_class cd = pow_of(c, dz), cd1 = cd * c;
            if (pow_of(a, t.x1) < cd || pow_of(b, t.y1) < cd)
                return fail("min{a^{x1}, b^{y1}} >= c^{z2-z1} fails");
            if (pow_of(a, t.x2) < cd1 || pow_of(b, t.y2) < cd1)
                return fail("min{a^{x2}, b^{y2}} >= c^{z2-z1+1} fails");
        }
        if (dz == 1 && t.z2 >= 4) {
            mpz_class c2 = c * c;
            if (pow_of(a, t.x2) < c2 || pow_of(b, t.y2) < c2)
                return fail("min{a^{x2}, b^{y2}} >= c^2 fails");
        }
    }
    return fo;
}

bool final_equation_check(const SieveCase& cs, const CandidateTuple& t, const mpz_class& a,
                          const mpz_class& b, const mpz_class& c, mpz_class* recovered) {
    (void)cs;
    int free_count = (a == 0) + (b == 0) + (c == 0);
    if (free_count > 1)
        throw domain_error("final_equation_check: at most one base may be free");
    auto set_rec = [&](const mpz_class& v) {
        if (recovered) *recovered = v;
    };
    if (free_count == 0) {
        return pow_of(a, t.x1) + pow_of(b, t.y1) == pow_of(c, t.z1) &&
               pow_of(a, t.x2) + pow_of(b, t.y2) == pow_of(c, t.z2);
    }
    if (c == 0) {
        mpz_class n1 = pow_of(a, t.x1) + pow_of(b, t.y1);
        mpz_class n2 = pow_of(a, t.x2) + pow_of(b, t.y2);
        if (t.z1 == t.z2 && n1 != n2) return false;
        mpz_class cr = floor_root(n1, t.z1);
        if (pow_of(cr, t.z1) != n1) return false;
        if (pow_of(cr, t.z2) != n2) return false;
        set_rec(cr);
        return true;
    }
    if (a == 0) {
        mpz_class a1 = pow_of(c, t.z1) - pow_of(b, t.y1);
        mpz_class a2 = pow_of(c, t.z2) - pow_of(b, t.y2);
        if (a1 <= 0 || a2 <= 0) return false;
        mpz_class ar = floor_root(a1, t.x1);
        if (pow_of(ar, t.x1) != a1) return false;
        if (pow_of(ar, t.x2) != a2) return false;
        set_rec(ar);
        return true;
    }
    mpz_class b1 = pow_of(c, t.z1) - pow_of(a, t.x1);
    mpz_class b2 = pow_of(c, t.z2) - pow_of(a, t.x2);
    if (b1 <= 0 || b2 <= 0) return false;
    mpz_class br = floor_root(b1, t.y1);
    if (pow_of(br, t.y1) != b1) return false;
    if (pow_of(br, t.y2) != b2) return false;
    set_rec(br);
    return true;
}

// ------------------------------------------------------------------
// Drivers

namespace {

struct CaseResult {
    unsigned long long candidates = 0;
    PruneCounters pruned;
    std::vector<SurvivorRecord> survivors;
    std::vector<std::string> notes;
    bool complete = true;
};

struct RunState {
    Clock::time_point deadline{};
    bool has_deadline = false;
    std::atomic<bool> out_of_budget{false};

    bool expired() {
        if (!has_deadline) return false;
        if (out_of_budget.load(std::memory_order_relaxed)) return true;
        if (Clock::now() >= deadline) {
            out_of_budget.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }
};

std::string case_label(const SieveCase& cs) {
    return cs.row_id + "(" + std::to_string(cs.beta) + "," + std::to_string(cs.alpha) + "," +
           std::to_string(cs.z1) + "," + std::to_string(cs.z2) + ")";
}

// Full admissibility of a concrete triple for its case: parity and signature,
// exactness of the 2-adic invariants, ordering, coprimality, no perfect
// powers, the bounds and caps, and a re-run of the pair filters against the
// actual smaller base.
bool admissible_triple(const SieveCase& cs, const CandidateTuple& t, const mpz_class& a,
                       const mpz_class& b, const mpz_class& c, std::string* why = nullptr) {
    auto reject = [&](const char* r) {
        if (why) *why = r;
        return false;
    };
    if (a < 3 || b < 3 || c < 4) return reject("base too small");
    if (mpz_even_p(a.get_mpz_t()) || mpz_even_p(b.get_mpz_t())) return reject("even base");
    if (mpz_odd_p(c.get_mpz_t())) return reject("odd c");
    if (a == b) return reject("equal bases");
    if (gcd(a, b) != 1 || gcd(a, c) != 1 || gcd(b, c) != 1) return reject("common factor");
    if (a % 4 == 1 && b % 4 == 1) return reject("both bases 1 mod 4");
    if (!exact_alpha_pair(a, b, cs.alpha)) return reject("alpha mismatch");
    if (nu2(c) != cs.beta) return reject("beta mismatch");
    if (a < cs.a0 || b < cs.b0 || c < cs.c0) return reject("below base floor");
    if (cs.a_cap != 0 && a > cs.a_cap) return reject("a cap");
    if (cs.b_cap != 0 && b > cs.b_cap) return reject("b cap");
    if (cs.c_cap != 0 && c > cs.c_cap) return reject("c cap");
    if (scenario_is_amax_impl(cs.scenario)) {
        if (a <= b || a <= c) return reject("a is not the maximum");
    } else {
        if (c <= a || c <= b || a <= b) return reject("ordering c > a > b fails");
    }
    if (cs.min_le7 == 1 && b > 7) return reject("min{a,b} > 7");
    if (cs.min_le7 == 0 && b < 11) return reject("min{a,b} <= 7");
    if (t.sa != 0 && a % pow2(cs.alpha) != sig_residue(t.sa, cs.alpha))
        return reject("a signature");
    if (t.sb != 0 && b % pow2(cs.alpha) != sig_residue(t.sb, cs.alpha))
        return reject("b signature");
    if (!is_nonpower(a) || !is_nonpower(b) || !is_nonpower(c)) return reject("perfect power");
    if (t.z1 < t.z2 && !g2_filter(odd_part_ul(std::gcd(t.x2, t.y2)), t.z2, cs.beta, t.z1, c))
        return reject("g2 filter");
    int a4 = static_cast<int>(mpz_class(a % 4).get_si());
    int b4 = static_cast<int>(mpz_class(b % 4).get_si());
    if (cs.scenario == Scenario::cmax_2mod4) {
        Sys2Candidate sc{t.x1, t.y1, t.x2, t.y2, t.z2};
        if (!red1_filter(sc, b)) return reject("pair filter");
    } else if (t.z1 < t.z2) {
        Sys12Candidate sc{t.x1, t.y1, t.z1, t.x2, t.y2, t.z2};
        if (!red5_filter(sc, a4, b4, b)) return reject("pair filter");
    }
    if (equation_is_listed_identity(pow_of(a, t.x1), pow_of(b, t.y1), pow_of(c, t.z1)))
        return reject("listed identity");
    return true;
}

void record_survivor(const SieveCase& cs, CaseResult& res, const CandidateTuple& t,
                     const mpz_class& a, const mpz_class& b, const mpz_class& c) {
    SurvivorRecord rec;
    rec.a = a;
    rec.b = b;
    rec.c = c;
    rec.tuple = t;
    rec.row_id = cs.row_id;
    res.survivors.push_back(std::move(rec));
}

// ---------------- c = 2 (mod 4) ----------------

void drive_cmax_2mod4(const SieveCase& cs, RunState& rs, CaseResult& res) {
    if (cs.c_cap == 0) {
        res.notes.push_back("case " + case_label(cs) + " skipped: no finite c range");
        res.complete = false;
        return;
    }
    // Rows whose first solution is a + b = c are handled in one pass by the
    // scenario-level paired-base stage, which enumerates (c, b) directly.
    if (cs.first_11 == 1) return;
    auto cands = generate_candidates(cs, &res.pruned);
    res.candidates += cands.size();
    if (cands.empty()) return;
    const mpz_class step = pow2(cs.alpha);
    const mpz_class cz2 = pow_of(cs.c_cap, cs.z2);
    static const int sigs[3][2] = {{-1, 1}, {-1, -1}, {1, -1}};

    for (const auto& cand0 : cands) {
        if (rs.expired()) { res.complete = false; return; }
        CandidateTuple t = cand0;
        for (const auto& sg : sigs) {
            t.sa = sg[0];
            t.sb = sg[1];

            // Finish one (a, b): order congruences, window-case condition,
            // exact recovery of c, both equations, admissibility.
            auto finish = [&](const mpz_class& a, const mpz_class& b, unsigned kind_bit) {
                if (gcd(a, b) != 1) return;
                if (!exact_alpha_pair(a, b, cs.alpha)) {
                    tally(&res.pruned, "exact-alpha");
                    return;
                }
                unsigned long e_a = static_cast<unsigned long>(std::abs(
                    static_cast<long>(t.x1 * cs.z2) - static_cast<long>(t.x2)));
                unsigned long e_b = static_cast<unsigned long>(std::abs(
                    static_cast<long>(t.y1 * cs.z2) - static_cast<long>(t.y2)));
                mpz_class mod_a = 2 * pow_of(b, std::min(t.y1, t.y2));
                bool cong;
                if (fits_u64(mod_a) && fits_u64(a))
                    cong = mod_pow_u64(to_u64(a), e_a, to_u64(mod_a)) == 1;
                else
                    cong = mod_pow(a, e_a, mod_a) == 1;
                if (cong) {
                    mpz_class mod_b = 2 * pow_of(a, std::min(t.x1, t.x2));
                    if (fits_u64(mod_b) && fits_u64(b))
                        cong = mod_pow_u64(to_u64(b), e_b, to_u64(mod_b)) == 1;
                    else
                        cong = mod_pow(b, e_b, mod_b) == 1;
                }
                if (!cong) {
                    tally(&res.pruned, "order-congruence");
                    return;
                }
                mpz_class A1 = pow_of(a, t.x1), B1 = pow_of(b, t.y1);
                mpz_class A2 = pow_of(a, t.x2), B2 = pow_of(b, t.y2);
                bool want1 = (kind_bit == 0 || kind_bit == 2);
                bool want2 = (kind_bit == 0 || kind_bit == 1);
                if ((A1 > B1) != want1 || (A2 > B2) != want2) {
                    tally(&res.pruned, "case-condition");
                    return;
                }
                mpz_class c = A1 + B1;
                if (nu2(c) != 1 || c < cs.c0 || c > cs.c_cap || c <= a) {
                    tally(&res.pruned, "admissibility");
                    return;
                }
                if (A2 + B2 != pow_of(c, cs.z2)) {
                    tally(&res.pruned, "final-equation");
                    return;
                }
                std::string why;
                if (!admissible_triple(cs, t, a, b, c, &why)) {
                    tally(&res.pruned, "admissibility");
                    return;
                }
                record_survivor(cs, res, t, a, b, c);
            };

            for (unsigned kind_bit = 0; kind_bit < 4; ++kind_bit) {
                if (!(t.red2_mask & (1u << kind_bit))) continue;
                if (rs.expired()) { res.complete = false; return; }

                // On the rows reaching this point (x1, y1) != (1, 1), so b is
                // always root-bounded: by b^{y1} < c when y1 >= 2, and by
                // b < a <= (c-1)^{1/x1} when y1 = 1 forces x1 >= 2.
                mpz_class b_hi = std::min(
                    {cs.b_cap, floor_root(cs.c_cap - 1, std::max(t.y1, 1ul)),
                     floor_root_rat(cz2, 1, t.y2),
                     floor_root(cs.c_cap - 1, std::max(t.x1, 1ul)),
                     floor_root_rat(cz2, 1, t.x2)});
                if (kind_bit == 0) {
                    long e = static_cast<long>(t.x2) -
                             static_cast<long>(t.x1) * static_cast<long>(cs.z2);
                    b_hi = std::min(b_hi,
                                    floor_root(pow2(cs.z2), static_cast<unsigned long>(e)));
                }
                IntervalKind kind = static_cast<IntervalKind>(kind_bit);
                auto scan_b = [&](const mpz_class& b) {
                    mpz_class lo0 = std::max(cs.a0, mpz_class(b + 2));
                    mpz_class hi0 = std::min({cs.a_cap, floor_root(cs.c_cap - 1, t.x1),
                                              floor_root_rat(cz2, 1, t.x2)});
                    BaseInterval iv = base_interval(kind, cs, t, b, lo0, hi0);
                    if (iv.empty()) {
                        tally(&res.pruned, "interval-empty");
                        return;
                    }
                    for (mpz_class a = align_up(iv.lo, step, sig_residue(t.sa, cs.alpha));
                         a <= iv.hi; a += step)
                        finish(a, b, kind_bit);
                };
                if (cs.min_le7 == 1) {
                    for (int v : {3, 5, 7})
                        if (v <= b_hi && mpz_class(v) % step == sig_residue(t.sb, cs.alpha))
                            scan_b(mpz_class(v));
                } else {
                    for (mpz_class b = align_up(cs.b0, step, sig_residue(t.sb, cs.alpha));
                         b <= b_hi; b += step) {
                        if (rs.expired()) { res.complete = false; return; }
                        scan_b(b);
                    }
                }
            }
        }
    }
}

// ---------------- paired-base stage (a + b = c rows) ----------------

// Rows whose first solution is a + b = c admit a direct sweep: for each
// c = 2 (mod 4) and each odd b < c/2 the larger base a = c - b is fixed, and
// a second solution a^{x2} + b^{y2} = c^{z2} forces an order condition on
// whichever base carries the bulk of c^{z2}. When a^{x2} > c^{z2}/2 the
// congruence chain mod b gives a^{x2 - z2} = 1 (mod 2b) with
// 1 <= x2 - z2 <= z2 log2/log a; when b^{y2} dominates, b^{y2 - z2} = 1
// (mod 2a) with y2 - z2 <= z2 log(c/b)/log b (and the borderline x2 = z2
// falls into the second condition as well, since y2 >= z2 + 1 there). Both
// gates are a handful of u64 products, so almost every pair dies before any
// bignum work. A surviving pair is probed at the top exponent of each base:
// the dominant power of a hit is its base's largest power below c^{z2}, so
// one subtraction and one exact-power test per side decide it.
void pair_scan_stage(const mpz_class& c_hi, unsigned long zmax, const SieveCaps& caps,
                     RunState& rs, CaseResult& res) {
    constexpr double kLog2 = 0.6931471805599453;
    if (!fits_u64(c_hi))
        throw std::domain_error("pair_scan_stage: c range exceeds the 64-bit sweep");
    unsigned long long c_top = to_u64(c_hi);
    std::vector<mpz_class> cpow(zmax + 1);
    for (unsigned long long cu = 18; cu <= c_top; cu += 4) {
        if (rs.expired()) { res.complete = false; return; }
        double lc = std::log(static_cast<double>(cu));
        bool have_pows = false;
        for (unsigned long long b = 3; 2 * b < cu; b += 2) {
            unsigned long long a = cu - b;
            if ((b & 0xff) == 1 && rs.expired()) { res.complete = false; return; }
            if (std::gcd(a, b) != 1) continue;
            if (a % 4 == 1 && b % 4 == 1) continue;
            double la = std::log(static_cast<double>(a));
            bool gate = false;
            {
                unsigned long long m = 2 * b, r = a % m, acc = r;
                unsigned long e_hi = static_cast<unsigned long>(zmax * kLog2 / la) + 1;
                for (unsigned long e = 1; e <= e_hi && !gate; ++e) {
                    if (acc == 1) gate = true;
                    acc = mod_mul_u64(acc, r, m);
                }
            }
            if (!gate) {
                double lb = std::log(static_cast<double>(b));
                unsigned long long m = 2 * a, r = b % m, acc = r;
                unsigned long f_hi = static_cast<unsigned long>(zmax * (lc - lb) / lb) + 1;
                for (unsigned long f = 1; f <= f_hi && !gate; ++f) {
                    if (acc == 1) gate = true;
                    acc = mod_mul_u64(acc, r, m);
                }
            }
            if (!gate) continue;
            if (!have_pows) {
                cpow[1] = static_cast<unsigned long>(cu);
                for (unsigned long z = 2; z <= zmax; ++z) cpow[z] = cpow[z - 1] * cpow[1];
                have_pows = true;
            }
            mpz_class A(static_cast<unsigned long>(a)), B(static_cast<unsigned long>(b));
            auto emit = [&](unsigned long x2, unsigned long y2, unsigned long z2) {
                SieveCase pseudo;
                pseudo.scenario = Scenario::cmax_2mod4;
                pseudo.row_id = "pairs";
                pseudo.alpha = std::min(nu2(A * A - 1), nu2(B * B - 1)) - 1;
                pseudo.beta = 1;
                pseudo.z1 = 1;
                pseudo.z2 = z2;
                pseudo.first_11 = 1;
                pseudo.min_le7 = b <= 7 ? 1 : 0;
                BaseBounds bb = make_base_bounds(pseudo.scenario, pseudo.alpha, 1,
                                                 pseudo.min_le7, 1);
                pseudo.a0 = bb.a0;
                pseudo.b0 = bb.b0;
                pseudo.c0 = bb.c0;
                pseudo.a_cap = caps.a;
                pseudo.b_cap = caps.b;
                pseudo.c_cap = c_hi;
                if (z2 < pseudo.alpha) return; // second z level below the 2-adic floor
                CandidateTuple t;
                t.x1 = 1; t.y1 = 1; t.x2 = x2; t.y2 = y2;
                t.z1 = 1; t.z2 = z2;
                ++res.candidates;
                if (admissible_triple(pseudo, t, A, B, cpow[1], nullptr))
                    record_survivor(pseudo, res, t, A, B, cpow[1]);
            };
            for (unsigned long z2 = 2; z2 <= zmax; ++z2) {
                const mpz_class& N = cpow[z2];
                unsigned long x2t = max_exp(A, N);
                if (x2t >= 2) {
                    mpz_class R = N - pow_of(A, x2t);
                    if (R >= 3) {
                        unsigned long y2 = exact_power_of(R, B);
                        if (y2 != 0) emit(x2t, y2, z2);
                    }
                }
                unsigned long y2t = max_exp(B, N);
                if (y2t >= 2) {
                    mpz_class R = N - pow_of(B, y2t);
                    if (R >= 3) {
                        unsigned long x2 = exact_power_of(R, A);
                        if (x2 != 0) emit(x2, y2t, z2);
                    }
                }
            }
        }
    }
}

// ---------------- brute-force stage ----------------

// All two-solution systems with c in [18, c_hi], odd coprime bases below c,
// z up to z_hi. Exhaustive, no filtering beyond the scenario split.
void brute_force_stage(Scenario scen, const mpz_class& c_hi, unsigned long z_hi,
                       const SieveCaps& caps, RunState& rs, CaseResult& res) {
    for (mpz_class c = 18; c <= c_hi; c += 2) {
        if (rs.expired()) { res.complete = false; return; }
        unsigned long beta = nu2(c);
        unsigned long cu = mpz_get_ui(c.get_mpz_t());
        std::map<std::pair<unsigned long, unsigned long>, std::vector<Solution>> sols;
        mpz_class N = 1;
        for (unsigned long z = 1; z <= z_hi; ++z) {
            N *= c;
            for (unsigned long a = 3; a < cu; a += 2) {
                mpz_class ap = a;
                for (unsigned long x = 1; ap < N; ++x, ap *= a) {
                    mpz_class R = N - ap;
                    if (R < 3) break;
                    for (unsigned long y = 1;; ++y) {
                        mpz_class b = floor_root(R, y);
                        if (b < 3) break;
                        if (pow_of(b, y) == R && mpz_odd_p(b.get_mpz_t()) && b < c &&
                            b != a && gcd(mpz_class(a), b) == 1)
                            sols[{a, mpz_get_ui(b.get_mpz_t())}].push_back({x, y, z});
                        if (b == 3) break;
                    }
                }
            }
        }
        for (auto& [key, list] : sols) {
            if (list.size() < 2) continue;
            sort_solutions(list);
            mpz_class a = key.first, b = key.second;
            if (a < b) continue; // the swapped pair is enumerated as well
            if (a % 4 == 1 && b % 4 == 1) continue;
            if (!is_nonpower(a) || !is_nonpower(b) || !is_nonpower(c)) continue;
            if (caps.a != 0 && a > caps.a) continue;
            if (caps.b != 0 && b > caps.b) continue;
            for (std::size_t i = 0; i < list.size(); ++i) {
                for (std::size_t j = i + 1; j < list.size(); ++j) {
                    const Solution &s1 = list[i], &s2 = list[j];
                    if (s1.z == s2.z) continue;
                    if (scen == Scenario::cmax_0mod4 && beta == 1 && s1.z == 1) continue;
                    if (scen == Scenario::cmax_2mod4 && !(beta == 1 && s1.z == 1)) continue;
                    SieveCase pseudo;
                    pseudo.scenario = scen;
                    pseudo.row_id = "brute";
                    pseudo.alpha = std::min(nu2(a * a - 1), nu2(b * b - 1)) - 1;
                    pseudo.beta = beta;
                    pseudo.z1 = s1.z;
                    pseudo.z2 = s2.z;
                    CandidateTuple t;
                    t.x1 = s1.x; t.y1 = s1.y; t.x2 = s2.x; t.y2 = s2.y;
                    t.z1 = s1.z; t.z2 = s2.z;
                    ++res.candidates;
                    record_survivor(pseudo, res, t, a, b, c);
                }
            }
        }
    }
}

// ---------------- c^{z1} = 0 (mod 4) ----------------

// Direct scan of one (z1, z2) pair over an aligned c range, for the stages
// where splitting c^{z1} into a^{x1} + b^{y1} is cheap. c > max form. The
// 2-adic level is read off each pair found, so the scan stands in for every
// alpha variant of its case.
void split_scan_stage(const SieveCase& cs, const mpz_class& c_lo, const mpz_class& c_hi,
                      RunState& rs, CaseResult& res) {
    mpz_class cstep = pow2(cs.beta + 1);
    mpz_class a0_loose = make_base_bounds(cs.scenario, 2, cs.beta, cs.min_le7, -1).a0;
    for (mpz_class c = align_up(c_lo, cstep, pow2(cs.beta)); c <= c_hi; c += cstep) {
        if (rs.expired()) { res.complete = false; return; }
        mpz_class N1 = pow_of(c, cs.z1), N2 = pow_of(c, cs.z2);
        for (mpz_class a = a0_loose; a < c; a += 2) {
            if (gcd(a, c) != 1) continue;
            mpz_class ap = a;
            for (unsigned long x1 = 1; ap < N1; ++x1, ap *= a) {
                mpz_class R = N1 - ap;
                if (R < 3) break;
                for (unsigned long y1 = 1;; ++y1) {
                    mpz_class b = floor_root(R, y1);
                    if (b < 3) break;
                    if (pow_of(b, y1) == R && mpz_odd_p(b.get_mpz_t()) && b < a) {
                        mpz_class ap2 = a;
                        for (unsigned long x2 = 1; ap2 < N2; ++x2, ap2 *= a) {
                            mpz_class R2 = N2 - ap2;
                            if (R2 < 1) break;
                            unsigned long y2 = exact_power_of(R2, b);
                            if (y2 == 0) continue;
                            CandidateTuple t;
                            t.x1 = x1; t.y1 = y1; t.x2 = x2; t.y2 = y2;
                            t.z1 = cs.z1; t.z2 = cs.z2;
                            ++res.candidates;
                            SieveCase cs2 = cs;
                            cs2.alpha = std::min(nu2(a * a - 1), nu2(b * b - 1)) - 1;
                            BaseBounds bb = make_base_bounds(cs.scenario, cs2.alpha,
                                                             cs.beta, cs.min_le7, -1);
                            cs2.a0 = bb.a0;
                            cs2.b0 = bb.b0;
                            cs2.c0 = bb.c0;
                            if (cs2.beta * cs2.z1 < cs2.alpha) {
                                tally(&res.pruned, "z-level");
                                continue;
                            }
                            std::string why;
                            if (admissible_triple(cs2, t, a, b, c, &why))
                                record_survivor(cs2, res, t, a, b, c);
                            else
                                tally(&res.pruned, "admissibility");
                        }
                    }
                    if (b == 3) break;
                }
            }
        }
    }
}

// Region stage shared between the c > max main stage and its a > max
// analogues: walk b along its signature class, intersect the candidate's
// a window, and close with the order congruences and exact recovery of c.
void region_search(const SieveCase& cs, const std::vector<CandidateTuple>& cands,
                   IntervalKind kind_x, IntervalKind kind_y, const mpz_class& c_floor,
                   RunState& rs, CaseResult& res) {
    const mpz_class step = pow2(cs.alpha);
    mpz_class cz1 = pow_of(cs.c_cap, cs.z1), cz2 = pow_of(cs.c_cap, cs.z2);
    for (const auto& t : cands) {
        if (rs.expired()) { res.complete = false; return; }
        IntervalKind kind;
        if (t.x1 < t.x2) kind = kind_x;
        else if (t.y1 < t.y2) kind = kind_y;
        else continue;
        mpz_class b_hi = std::min(min_cap(cs.b_cap, floor_root_rat(cz1, 1, t.y1)),
                                  floor_root_rat(cz2, 1, t.y2));
        mpz_class a_hi0 = std::min(min_cap(cs.a_cap, floor_root_rat(cz1, 1, t.x1)),
                                   floor_root_rat(cz2, 1, t.x2));
        for (mpz_class b = align_up(cs.b0, step, sig_residue(t.sb, cs.alpha)); b <= b_hi;
             b += step) {
            if (rs.expired()) { res.complete = false; return; }
            BaseInterval iv =
                base_interval(kind, cs, t, b, std::max(cs.a0, mpz_class(b + 2)), a_hi0);
            if (iv.empty()) {
                tally(&res.pruned, "interval-empty");
                continue;
            }
            mpz_class B1 = pow_of(b, t.y1), B2 = pow_of(b, t.y2);
            for (mpz_class a = align_up(iv.lo, step, sig_residue(t.sa, cs.alpha)); a <= iv.hi;
                 a += step) {
                if (gcd(a, b) != 1) continue;
                if (!exact_alpha_pair(a, b, cs.alpha)) {
                    tally(&res.pruned, "exact-alpha");
                    continue;
                }
                if (!congruence_sieve(cs, t, a, b, 0)) {
                    tally(&res.pruned, "order-congruence");
                    continue;
                }
                mpz_class N1 = pow_of(a, t.x1) + B1;
                mpz_class cr = floor_root(N1, cs.z1);
                if (pow_of(cr, cs.z1) != N1) {
                    tally(&res.pruned, "final-equation");
                    continue;
                }
                if (cr < c_floor || cr > cs.c_cap || nu2(cr) != cs.beta) {
                    tally(&res.pruned, "admissibility");
                    continue;
                }
                if (pow_of(a, t.x2) + B2 != pow_of(cr, cs.z2)) {
                    tally(&res.pruned, "final-equation");
                    continue;
                }
                std::string why;
                if (!admissible_triple(cs, t, a, b, cr, &why)) {
                    tally(&res.pruned, "admissibility");
                    continue;
                }
                record_survivor(cs, res, t, a, b, cr);
            }
        }
    }
}

void drive_cmax_0mod4(const SieveCase& cs, RunState& rs, CaseResult& res) {
    unsigned long dz = cs.z2 - cs.z1;
    if (cs.c_cap != 0 && cs.c_cap < 1000) {
        res.notes.push_back("case " + case_label(cs) + ": covered by the brute-force stage");
        return;
    }
    if ((cs.z1 == 1 && cs.z2 == 2) || (cs.z1 == 2 && cs.z2 == 3)) {
        // One scan per (row, beta, z-pair); it derives the 2-adic level from
        // each pair it finds, so the alpha variants of the case are covered.
        if (cs.alpha != 2) return;
        const auto& params = scenario_params(Scenario::cmax_0mod4);
        mpz_class stage_cap =
            cs.z1 == 1 ? params.at("smallz2_12_c") : params.at("smallz2_23_c");
        split_scan_stage(cs, std::max(cs.c0, mpz_class(1000)),
                         min_cap(cs.c_cap, stage_cap - 1), rs, res);
        return;
    }
    if (dz != 1 || cs.z2 < 4) {
        res.notes.push_back("case " + case_label(cs) +
                            " skipped: no scan stage for this exponent pair above the "
                            "brute-force range");
        res.complete = false;
        return;
    }
    if (cs.c_cap == 0) {
        res.notes.push_back("case " + case_label(cs) + " skipped: no finite c range");
        res.complete = false;
        return;
    }
    if (candidate_grid_size(cs) > 2e7) {
        res.notes.push_back("case " + case_label(cs) +
                            " skipped: exponent grid too large without tighter caps");
        res.complete = false;
        return;
    }
    auto cands = generate_candidates(cs, &res.pruned);
    res.candidates += cands.size();
    region_search(cs, cands, IntervalKind::assu8, IntervalKind::red9,
                  std::max(cs.c0, mpz_class(1000)), rs, res);
}

// ---------------- a > max, x1 != x2 ----------------

// Scan for systems whose solution t has min{a^{x_t}, b^{y_t}} < c^{margin_exp};
// the size facts of the zone exclude these, so any hit is reported.
void margin_scan(const SieveCase& cs, unsigned long zt, unsigned long xt_hi,
                 unsigned long margin_exp, RunState& rs, CaseResult& res) {
    mpz_class cstep = pow2(cs.beta + 1);
    auto complete_pair = [&](const mpz_class& ar, const mpz_class& b, const mpz_class& c,
                             unsigned long x, unsigned long y) {
        unsigned long zo = (zt == cs.z1) ? cs.z2 : cs.z1;
        mpz_class No = pow_of(c, zo);
        mpz_class ap = ar;
        for (unsigned long xo = 1; ap < No; ++xo, ap *= ar) {
            mpz_class R = No - ap;
            if (R < 3) break;
            unsigned long yo = exact_power_of(R, b);
            if (yo == 0) continue;
            CandidateTuple t;
            if (zt == cs.z1) { t.x1 = x; t.y1 = y; t.x2 = xo; t.y2 = yo; }
            else { t.x1 = xo; t.y1 = yo; t.x2 = x; t.y2 = y; }
            t.z1 = cs.z1; t.z2 = cs.z2;
            ++res.candidates;
            std::string why;
            if (admissible_triple(cs, t, ar, b, c, &why))
                record_survivor(cs, res, t, ar, b, c);
        }
    };
    for (mpz_class c = align_up(cs.c0, cstep, pow2(cs.beta)); c <= cs.c_cap; c += cstep) {
        if (rs.expired()) { res.complete = false; return; }
        mpz_class margin = pow_of(c, margin_exp);
        mpz_class Nt = pow_of(c, zt);
        // a-side margin: b^{y} sits just below c^{z_t}
        for (unsigned long y = 1; y <= max_exp(cs.b0, Nt); ++y) {
            mpz_class blo = ceil_root_rat(Nt - margin + 1, 1, y);
            mpz_class bhi = min_cap(floor_root(Nt - 1, y), cs.b_cap);
            if (mpz_even_p(blo.get_mpz_t())) ++blo;
            for (mpz_class b = blo; b <= bhi; b += 2) {
                if (gcd(b, c) != 1) continue;
                mpz_class A = Nt - pow_of(b, y);
                for (unsigned long x = 1; x <= xt_hi; ++x) {
                    mpz_class ar = floor_root(A, x);
                    if (ar <= std::max(b, c)) break;
                    if (pow_of(ar, x) == A) complete_pair(ar, b, c, x, y);
                }
            }
        }
        // b-side margin: b^{y} < c^{margin_exp} while a^{x} sits just below
        for (unsigned long y = 1; y <= max_exp(cs.b0, margin - 1); ++y) {
            for (mpz_class b = cs.b0; pow_of(b, y) < margin; b += 2) {
                if (cs.b_cap != 0 && b > cs.b_cap) break;
                if (gcd(b, c) != 1) continue;
                mpz_class A = Nt - pow_of(b, y);
                if (A < 3) continue;
                for (unsigned long x = 1; x <= cs.z2; ++x) {
                    mpz_class ar = floor_root(A, x);
                    if (ar <= std::max(b, c)) break;
                    if (pow_of(ar, x) == A) complete_pair(ar, b, c, x, y);
                }
            }
        }
    }
}

// The z1 < 2(z2 - z1) zone, and the (2,3) pair: direct base loops with exact
// recovery of a from the first equation.
void dxpos_small_z1_zone(const SieveCase& cs, const std::vector<CandidateTuple>& cands,
                         RunState& rs, CaseResult& res) {
    mpz_class cstep = pow2(cs.beta + 1);
    const mpz_class bstep = pow2(cs.alpha);
    unsigned long min_y1 = cs.z2 * 64;
    for (const auto& t : cands) min_y1 = std::min(min_y1, t.y1);
    min_y1 = std::max(min_y1, 1ul);
    for (mpz_class c = align_up(cs.c0, cstep, pow2(cs.beta)); c <= cs.c_cap; c += cstep) {
        if (rs.expired()) { res.complete = false; return; }
        mpz_class Cz1 = pow_of(c, cs.z1), Cz2 = pow_of(c, cs.z2);
        mpz_class b_hi = min_cap(cs.b_cap, floor_root(Cz1 - 1, min_y1));
        for (int sb : {1, -1}) {
            for (mpz_class b = align_up(cs.b0, bstep, sig_residue(sb, cs.alpha)); b <= b_hi;
                 b += bstep) {
                if (gcd(b, c) != 1) continue;
                for (const auto& t : cands) {
                    if (t.sb != sb) continue;
                    if (b > c && (t.y1 >= cs.z1 || t.y2 >= cs.z2)) continue;
                    mpz_class B1 = pow_of(b, t.y1);
                    if (B1 >= Cz1) continue;
                    if (pow_of(b, t.y2) >= Cz2) continue;
                    mpz_class ar;
                    if (!final_equation_check(cs, t, 0, b, c, &ar)) {
                        tally(&res.pruned, "final-equation");
                        continue;
                    }
                    std::string why;
                    if (!admissible_triple(cs, t, ar, b, c, &why)) {
                        tally(&res.pruned, "admissibility");
                        continue;
                    }
                    record_survivor(cs, res, t, ar, b, c);
                }
            }
        }
    }
}

void drive_amax_dxpos(const SieveCase& cs, RunState& rs, CaseResult& res) {
    if (candidate_grid_size(cs) > 2e7) {
        res.notes.push_back("case " + case_label(cs) +
                            " skipped: exponent grid too large without tighter caps");
        res.complete = false;
        return;
    }
    unsigned long dz = cs.z2 - cs.z1;
    auto cands = generate_candidates(cs, &res.pruned);
    res.candidates += cands.size();
    if (cands.empty()) return;
    if (dz >= 2 && cs.z1 < 2 * dz) {
        dxpos_small_z1_zone(cs, cands, rs, res);
        return;
    }
    if (dz == 1 && cs.z1 == 2 && cs.z2 == 3) {
        dxpos_small_z1_zone(cs, cands, rs, res);
        return;
    }
    if (dz >= 2) {
        margin_scan(cs, cs.z1, dz - 1, dz, rs, res);
        margin_scan(cs, cs.z2, dz, dz + 1, rs, res);
    } else {
        margin_scan(cs, cs.z2, 1, 2, rs, res);
    }
    region_search(cs, cands, IntervalKind::assu14, IntervalKind::assu15, cs.c0, rs, res);
}

// ---------------- a > max, x1 = x2 ----------------

void drive_amax_dx0_k3(const SieveCase& cs, RunState& rs, CaseResult& res) {
    auto cands = generate_candidates(cs, &res.pruned);
    res.candidates += cands.size();
    if (cands.empty()) return;
    unsigned long dz = cs.z2 - cs.z1;
    const mpz_class bstep = pow2(cs.alpha);
    mpz_class cz1_cap = pow_of(cs.c_cap, cs.z1);
    for (const auto& t : cands) {
        if (rs.expired()) { res.complete = false; return; }
        mpz_class b_hi = min_cap(cs.b_cap, floor_root_rat(cz1_cap, 1, t.y1));
        for (mpz_class b = align_up(cs.b0, bstep, sig_residue(t.sb, cs.alpha)); b <= b_hi;
             b += bstep) {
            if (rs.expired()) { res.complete = false; return; }
            mpz_class By1 = pow_of(b, t.y1);
            mpz_class rhs = By1 * (pow_of(b, t.y2 - t.y1) - 1);
            auto check_c = [&](const mpz_class& c) {
                if (pow_of(c, cs.z1) * (pow_of(c, dz) - 1) != rhs) {
                    tally(&res.pruned, "final-equation");
                    return;
                }
                mpz_class ar;
                if (final_equation_check(cs, t, 0, b, c, &ar)) {
                    std::string why;
                    if (admissible_triple(cs, t, ar, b, c, &why))
                        record_survivor(cs, res, t, ar, b, c);
                }
            };
            if (dz == 1) {
                // c^{z1} (c - 1) = b^{y1} (b^{dy} - 1) forces b^{y1} | c - 1;
                // combine with the 2-adic alignment of c and walk that class.
                mpz_class two = pow2(cs.beta + 1);
                mpz_class inv;
                if (!mpz_invert(inv.get_mpz_t(), By1.get_mpz_t(), two.get_mpz_t())) continue;
                mpz_class k = (pow2(cs.beta) - 1) * inv % two;
                if (k < 0) k += two;
                mpz_class m = By1 * two;
                for (mpz_class c = align_up(cs.c0, m, 1 + By1 * k); c <= cs.c_cap; c += m)
                    check_c(c);
            } else {
                mpz_class cstep = pow2(cs.beta + 1);
                for (mpz_class c = align_up(cs.c0, cstep, pow2(cs.beta)); c <= cs.c_cap;
                     c += cstep)
                    check_c(c);
            }
        }
    }
}

void drive_amax_dx0_kne3(const SieveCase& cs, RunState& rs, CaseResult& res) {
    if (candidate_grid_size(cs) > 2e7) {
        res.notes.push_back("case " + case_label(cs) +
                            " skipped: exponent grid too large without tighter caps");
        res.complete = false;
        return;
    }
    if (cs.c_cap == 0) {
        res.notes.push_back("case " + case_label(cs) + " skipped: no finite c range");
        res.complete = false;
        return;
    }
    auto cands = generate_candidates(cs, &res.pruned);
    res.candidates += cands.size();
    if (cands.empty()) return;
    mpz_class cstep = pow2(cs.beta + 1);
    const mpz_class bstep = pow2(cs.alpha);
    unsigned long dz = cs.z2 - cs.z1;
    for (mpz_class c = align_up(cs.c0, cstep, pow2(cs.beta)); c <= cs.c_cap; c += cstep) {
        if (rs.expired()) { res.complete = false; return; }
        mpz_class Cdz = pow_of(c, dz);
        if (cs.cdz_cap != 0 && Cdz > cs.cdz_cap) break;
        mpz_class Cz1 = pow_of(c, cs.z1);
        for (int sb : {1, -1}) {
            mpz_class b_hi = min_cap(cs.b_cap, Cz1 - 1);
            for (mpz_class b = align_up(cs.b0, bstep, sig_residue(sb, cs.alpha)); b <= b_hi;
                 b += bstep) {
                if (gcd(b, c) != 1) continue;
                for (const auto& t : cands) {
                    if (t.sb != sb) continue;
                    unsigned long dy = t.y1 > t.y2 ? t.y1 - t.y2 : t.y2 - t.y1;
                    mpz_class Bdy = pow_of(b, dy);
                    if (cs.kne3_case == 1 && !(Bdy < Cdz)) continue;
                    if (cs.kne3_case == 2 && !(Bdy > Cdz)) continue;
                    if (cs.bdy_cap != 0 && Bdy > cs.bdy_cap) continue;
                    mpz_class ar;
                    if (!final_equation_check(cs, t, 0, b, c, &ar)) {
                        tally(&res.pruned, "final-equation");
                        continue;
                    }
                    std::string why;
                    if (!admissible_triple(cs, t, ar, b, c, &why)) {
                        tally(&res.pruned, "admissibility");
                        continue;
                    }
                    record_survivor(cs, res, t, ar, b, c);
                }
            }
        }
    }
}

// ---------------- equal z ----------------

// Search for a third solution of a^x + b^y = c^z beyond the two known ones,
// up to the growth ceiling on z. Returns true when none exists; fills
// `detail` either way.
bool third_solution_absent(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                           unsigned long z1, const CandidateTuple& t, std::string& detail) {
    BoundContext ctx;
    ctx.alpha = std::min(nu2(a * a - 1), nu2(b * b - 1)) - 1;
    ctx.beta = nu2(c);
    mpz_class mn = std::min(a, b);
    ctx.m2_base = mn <= 7 ? mpz_get_ui(mn.get_mpz_t()) : 0;
    Real h = h_bound(ctx, c, c, c);
    unsigned long z_hi = static_cast<unsigned long>(std::ceil(static_cast<double>(h))) + 1;

    auto known = [&](unsigned long x, unsigned long y, unsigned long z) {
        return (x == t.x1 && y == t.y1 && z == z1) || (x == t.x2 && y == t.y2 && z == z1);
    };
    // z up to the known pair: direct splits.
    for (unsigned long z = 1; z <= z1; ++z) {
        mpz_class N = pow_of(c, z);
        mpz_class ap = a;
        for (unsigned long x = 1; ap < N; ++x, ap *= a) {
            mpz_class R = N - ap;
            if (R < 1) break;
            unsigned long y = exact_power_of(R, b);
            if (y != 0 && !known(x, y, z)) {
                detail = "a third solution exists at z = " + std::to_string(z);
                return false;
            }
        }
    }
    // z beyond the pair: b^y = -a^x (mod c^2), plus the order congruences
    // against both known solutions, then exact verification of the matches.
    mpz_class c2m = c * c;
    if (!fits_u64(c2m)) {
        detail = "third-solution scan skipped: c^2 does not fit the residue table";
        return false;
    }
    u64 m = to_u64(c2m);
    u64 bu = to_u64(b % c2m), au = to_u64(a % c2m);
    std::unordered_map<u64, unsigned long> table;
    u64 r = 1;
    unsigned long ord_b = 0;
    for (unsigned long e = 1; e <= 50000000ul; ++e) {
        r = mod_mul_u64(r, bu, m);
        if (r == 1) { ord_b = e; break; }
        if (table.size() >= 16000000ul) break;
        table.emplace(r, e);
    }
    if (ord_b == 0) {
        detail = "third-solution scan skipped: order of b mod c^2 out of reach";
        return false;
    }
    // Any further solution (x, y, z) with z >= z1 satisfies a^x = -b^y
    // (mod c^{z1}); crossed with a known solution this pins x*yt - xt*y to a
    // multiple of the least exponent where a (resp. b) reaches +-1.
    mpz_class cz1m = pow_of(c, z1);
    unsigned long ha, hb;
    try {
        ha = order_data(a, cz1m, 2000000ul).n;
        hb = order_data(b, cz1m, 2000000ul).n;
    } catch (const std::runtime_error&) {
        detail = "third-solution scan skipped: sign order mod c^{z1} out of reach";
        return false;
    }
    double la = std::log(mpz_get_d(a.get_mpz_t())), lb = std::log(mpz_get_d(b.get_mpz_t()));
    double lc = std::log(mpz_get_d(c.get_mpz_t()));
    unsigned long x_hi = static_cast<unsigned long>(z_hi * lc / la) + 2;
    unsigned long y_hi = static_cast<unsigned long>(z_hi * lc / lb) + 2;
    u64 apow = 1;
    for (unsigned long x = 1; x <= x_hi; ++x) {
        apow = mod_mul_u64(apow, au, m);
        u64 target = m - apow; // -a^x mod c^2; a is coprime to c so apow != 0
        unsigned long y0;
        if (target == 1) y0 = ord_b;
        else if (auto it = table.find(target); it != table.end()) y0 = it->second;
        else continue;
        for (unsigned long y = y0; y <= y_hi; y += ord_b) {
            auto cross_ok = [&](unsigned long xt, unsigned long yt) {
                long long cross =
                    static_cast<long long>(xt) * y - static_cast<long long>(x) * yt;
                unsigned long long cr = static_cast<unsigned long long>(
                    cross < 0 ? -cross : cross);
                return cr % ha == 0 && cr % hb == 0;
            };
            if (!cross_ok(t.x1, t.y1) || !cross_ok(t.x2, t.y2)) continue;
            mpz_class N = pow_of(a, x) + pow_of(b, y);
            unsigned long z = exact_power_of(N, c);
            if (z > z1 && z <= z_hi) {
                detail = "a third solution exists at z = " + std::to_string(z);
                return false;
            }
        }
    }
    detail = "no third solution with z <= " + std::to_string(z_hi);
    return true;
}

void drive_equal_z(const SieveCase& cs, RunState& rs, CaseResult& res, bool three_mode) {
    const bool amax = (cs.scenario == Scenario::z1_eq_z2_amax);
    if (cs.b_cap == 0 || cs.a_cap == 0 || cs.c_cap == 0) {
        res.notes.push_back("equal-z case (" + std::to_string(cs.beta) + "," +
                            std::to_string(cs.alpha) + "," + std::to_string(cs.z1) +
                            ") skipped: no finite caps for the enumeration");
        res.complete = false;
        return;
    }
    mpz_class cz1_cap = pow_of(cs.c_cap, cs.z1);
    {
        double work = mpz_get_d(cs.b_cap.get_mpz_t()) / 2.0 *
                      std::max<unsigned long>(max_exp(3, cz1_cap), 1) *
                      (mpz_get_d(cs.a_cap.get_mpz_t()) / 2.0);
        if (work > 4e9) {
            res.notes.push_back("equal-z case (" + std::to_string(cs.beta) + "," +
                                std::to_string(cs.alpha) + "," + std::to_string(cs.z1) +
                                ") skipped: enumeration too large without tighter caps");
            res.complete = false;
            return;
        }
    }
    const bool a_small = mpz_fits_ulong_p(cs.a_cap.get_mpz_t());
    for (mpz_class b = 3; b <= cs.b_cap; b += 2) {
        if (rs.expired()) { res.complete = false; return; }
        if (nu2(b * b - 1) < cs.alpha + 1 || !is_nonpower(b)) continue;
        unsigned long y1_hi = max_exp(b, cz1_cap);
        if (y1_hi < 4) continue;
        // a divides b^{Dy} - 1; walk Dy once and fan out over the (y1, y2)
        // pairs sharing it afterwards.
        for (unsigned long Dy = 2; Dy + 1 <= y1_hi; ++Dy) {
            mpz_class M = pow_of(b, Dy) - 1;
            for (mpz_class a = b + 2; a <= cs.a_cap; a += 2) {
                bool divides =
                    a_small ? mpz_fdiv_ui(M.get_mpz_t(), mpz_get_ui(a.get_mpz_t())) == 0
                            : mpz_divisible_p(M.get_mpz_t(), a.get_mpz_t()) != 0;
                if (!divides) continue;
                ++res.candidates;
                if (a % 4 == 1 && b % 4 == 1) {
                    tally(&res.pruned, "parity");
                    continue;
                }
                if (!exact_alpha_pair(a, b, cs.alpha)) {
                    tally(&res.pruned, "exact-alpha");
                    continue;
                }
                if (gcd(a, b) != 1) continue;
                unsigned long x2_cap = max_exp(a, cz1_cap);
                for (unsigned long y1 = std::max(4ul, Dy + 1); y1 <= y1_hi; ++y1) {
                    unsigned long y2 = y1 - Dy;
                    unsigned long x2_hi =
                        std::min(x2_cap, static_cast<unsigned long>(y1 - 1));
                    for (unsigned long x2 = 2; x2 <= x2_hi; ++x2) {
                        for (unsigned long x1 = 1; x1 < std::min<unsigned long>(x2, Dy);
                             ++x1) {
                            if (x1 * y1 + y2 * x2 >= x2 * y1) {
                                tally(&res.pruned, "case-window");
                                continue;
                            }
                            if (!two_adic_ok(cs, x1, y1, x2, y2)) {
                                tally(&res.pruned, "2-adic");
                                continue;
                            }
                            if (x1 >= 2 && mod_pow(b, Dy, pow_of(a, x1)) != 1) {
                                tally(&res.pruned, "order-congruence");
                                continue;
                            }
                            unsigned long Dx = x2 - x1;
                            if (mod_pow(a, Dx, pow_of(b, y2)) != 1) {
                                tally(&res.pruned, "order-congruence");
                                continue;
                            }
                            if ((Dx % 2 == 1 || Dy % 2 == 1) &&
                                !((cs.beta == 1 && cs.z1 == 1) ||
                                  cs.beta * cs.z1 == cs.alpha)) {
                                tally(&res.pruned, "parity");
                                continue;
                            }
                            mpz_class N1 = pow_of(a, x1) + pow_of(b, y1);
                            if (N1 != pow_of(a, x2) + pow_of(b, y2)) {
                                tally(&res.pruned, "final-equation");
                                continue;
                            }
                            mpz_class cr = floor_root(N1, cs.z1);
                            if (pow_of(cr, cs.z1) != N1) {
                                tally(&res.pruned, "final-equation");
                                continue;
                            }
                            CandidateTuple t;
                            t.x1 = x1; t.y1 = y1; t.x2 = x2; t.y2 = y2;
                            t.z1 = cs.z1; t.z2 = cs.z1;
                            t.a = a; t.b = b;
                            std::string why;
                            if (!admissible_triple(cs, t, a, b, cr, &why)) {
                                tally(&res.pruned, "admissibility");
                                continue;
                            }
                            SurvivorRecord rec;
                            rec.a = a;
                            rec.b = b;
                            rec.c = cr;
                            rec.tuple = t;
                            rec.row_id = cs.row_id;
                            if (three_mode && !amax) {
                                std::string detail;
                                if (third_solution_absent(a, b, cr, cs.z1, t, detail))
                                    rec.status = "eliminated: " + detail;
                                res.notes.push_back("equal-z candidate (" + a.get_str() +
                                                    "," + b.get_str() + "," + cr.get_str() +
                                                    "): " + detail);
                            } else if (three_mode) {
                                res.notes.push_back(
                                    "equal-z candidate (" + a.get_str() + "," + b.get_str() +
                                    "," + cr.get_str() +
                                    "): kept; no third-solution scan in this scenario");
                            }
                            res.survivors.push_back(std::move(rec));
                        }
                    }
                }
            }
        }
    }
}

void drive_case(const SieveCase& cs, RunState& rs, CaseResult& res, bool three_mode) {
    switch (cs.scenario) {
        case Scenario::cmax_2mod4: drive_cmax_2mod4(cs, rs, res); break;
        case Scenario::cmax_0mod4: drive_cmax_0mod4(cs, rs, res); break;
        case Scenario::amax_dxpos: drive_amax_dxpos(cs, rs, res); break;
        case Scenario::amax_dx0_k3: drive_amax_dx0_k3(cs, rs, res); break;
        case Scenario::amax_dx0_kne3: drive_amax_dx0_kne3(cs, rs, res); break;
        case Scenario::z1_eq_z2_cmax:
        case Scenario::z1_eq_z2_amax: drive_equal_z(cs, rs, res, three_mode); break;
    }
}

} // namespace

// ------------------------------------------------------------------
// Orchestration

SieveReport run_sieve(Scenario s, const SieveOptions& opt) {
    SieveReport rep;
    rep.scenario = s;
    if (opt.validate_table) {
        TableValidation tv = validate_case_table(s);
        if (!tv.ok) {
            rep.complete = false;
            rep.notes.push_back("bound-table validation failed");
            rep.notes.insert(rep.notes.end(), tv.issues.begin(), tv.issues.end());
            return rep;
        }
    }
    auto cases = build_case_table(s, opt.caps);
    rep.cases_total = cases.size();

    RunState rs;
    if (opt.budget_ms) {
        rs.deadline = Clock::now() + std::chrono::milliseconds(opt.budget_ms);
        rs.has_deadline = true;
    }

    std::vector<CaseResult> results(cases.size());
    unsigned workers = opt.workers ? opt.workers : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (cases.size() < workers) workers = cases.empty() ? 1 : static_cast<unsigned>(cases.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cases.size()) return;
            drive_case(cases[i], rs, results[i], opt.three_solution_mode);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    // Merge in case order so the report is deterministic for any worker count.
    std::vector<std::string> seen;
    auto merge_survivor = [&](SurvivorRecord&& sv) {
        std::ostringstream key;
        key << sv.a << '|' << sv.b << '|' << sv.c << '|' << sv.tuple.x1 << '|' << sv.tuple.y1
            << '|' << sv.tuple.x2 << '|' << sv.tuple.y2 << '|' << sv.tuple.z1 << '|'
            << sv.tuple.z2;
        if (std::find(seen.begin(), seen.end(), key.str()) != seen.end()) return;
        seen.push_back(key.str());
        rep.survivors.push_back(std::move(sv));
    };

    if (s == Scenario::cmax_2mod4 && !cases.empty()) {
        mpz_class scan_hi = 0;
        unsigned long zmax = 0;
        for (const auto& cs : cases) {
            if (cs.first_11 != 1) continue;
            scan_hi = std::max(scan_hi, cs.c_cap);
            zmax = std::max(zmax, cs.z2);
        }
        if (scan_hi >= 18) {
            CaseResult pares;
            pair_scan_stage(scan_hi, zmax, opt.caps, rs, pares);
            rep.notes.push_back("paired-base stage covered the a + b = c rows for c in [18, " +
                                scan_hi.get_str() + "]");
            rep.candidates += pares.candidates;
            for (auto& sv : pares.survivors) merge_survivor(std::move(sv));
            if (!pares.complete) rep.complete = false;
        }
    }
    if (s == Scenario::cmax_0mod4 && !cases.empty()) {
        mpz_class brute_hi = 0;
        for (const auto& cs : cases) brute_hi = std::max(brute_hi, cs.c_cap);
        brute_hi = std::min(brute_hi, mpz_class(999));
        if (brute_hi >= 18) {
            CaseResult brute;
            brute_force_stage(s, brute_hi, 25, opt.caps, rs, brute);
            rep.notes.push_back("brute-force stage covered c in [18, " + brute_hi.get_str() +
                                "], z up to 25");
            rep.candidates += brute.candidates;
            for (auto& sv : brute.survivors) merge_survivor(std::move(sv));
            if (!brute.complete) rep.complete = false;
        }
    }
    if (!opt.three_solution_mode)
        rep.notes.push_back(
            "two-solution mode: the tabulated regions are kept as search definitions; "
            "their derivations presuppose a third solution");

    for (std::size_t i = 0; i < cases.size(); ++i) {
        rep.candidates += results[i].candidates;
        for (auto& [k, v] : results[i].pruned) rep.pruned[k] += v;
        for (auto& n : results[i].notes) rep.notes.push_back(n);
        if (!results[i].complete) rep.complete = false;
        for (auto& sv : results[i].survivors) merge_survivor(std::move(sv));
    }
    rep.cases_run = cases.size();
    if (rs.has_deadline && rs.out_of_budget.load())
        rep.notes.push_back("time budget exhausted; coverage is partial");
    return rep;
}

TableValidation validate_case_table(Scenario s) {
    TableValidation tv;
    const ScenarioConfig& cfg = config_for(s);
    if (s == Scenario::z1_eq_z2_cmax || s == Scenario::z1_eq_z2_amax) {
        if (!cfg.params.count("Mc")) {
            tv.ok = false;
            tv.issues.push_back("equal-z scenario missing its Mc parameter");
        }
        return tv;
    }
    for (const auto& row : cfg.rows) {
        unsigned long claim = row.z2_eq ? row.z2_eq : row.z2_hi;
        if (claim > 230) {
            tv.ok = false;
            tv.issues.push_back("row " + row.id + ": z2 claim exceeds the global ceiling 230");
            continue;
        }
        // c-proxy for the growth bound: the row's own c cap, else the c^dz
        // cap, else (a > max) the a cap, else the scenario-wide cap.
        mpz_class c_proxy = row.c_lt != 0 ? mpz_class(row.c_lt - 1) : mpz_class(0);
        if (c_proxy == 0 && row.cdz_lt != 0) c_proxy = row.cdz_lt - 1;
        if (c_proxy == 0 && row.a_lt != 0 && scenario_is_amax_impl(s)) c_proxy = row.a_lt - 1;
        if (c_proxy == 0 && cfg.params.count("c_all")) c_proxy = cfg.params.at("c_all") - 1;
        if (c_proxy == 0) {
            tv.issues.push_back("row " + row.id + ": no c cap to validate against (skipped)");
            continue;
        }
        // The machinery ceiling is loosest at beta = 1 with the row's largest
        // alpha; the row claim must stay below it.
        unsigned long alpha = row.alpha_eq ? row.alpha_eq : (row.alpha_hi ? row.alpha_hi : 2);
        if (row.minb == 1) alpha = std::min(alpha, 3ul);
        BoundContext ctx;
        ctx.alpha = alpha;
        ctx.beta = 1;
        ctx.m2_base = row.minb == 1 ? 3 : 0;
        ctx.g = row.g2_eq ? row.g2_eq : std::max(row.g2_lo, 1ul);
        BaseBounds bb = make_base_bounds(s, alpha, 1, row.minb, row.first);
        ctx.a0 = bb.a0;
        ctx.b0 = bb.b0;
        ctx.c0 = bb.c0;
        unsigned long u2 = u2_ceiling(ctx, c_proxy);
        if (claim > u2) {
            tv.ok = false;
            tv.issues.push_back("row " + row.id + ": z2 claim " + std::to_string(claim) +
                                " exceeds the derived ceiling " + std::to_string(u2));
        }
    }
    return tv;
}

} // namespace pillai
