#include "pillai/constraints.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pillai/arith.hpp"

namespace pillai {

namespace {

mpz_class pow_of(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Value of one side X^p, honoring the p == 0 "any exponent" marker (base 1).
mpz_class side_value(const mpz_class& base, unsigned long e) {
    return pow_of(base, e == 0 ? 1 : e);
}

bool odd(unsigned long v) { return v % 2 == 1; }

std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool row_matches(const SignatureRow& row, unsigned long p, unsigned long q, unsigned long r,
                 bool z_div5) {
    if (row.requires_z_div5 && !z_div5) return false;
    unsigned long n = 0;
    bool have_n = false;
    auto bind = [&](unsigned long pat, unsigned long val) {
        if (pat != 0) return pat == val;
        if (have_n) return n == val;
        n = val;
        have_n = true;
        return true;
    };
    if (!bind(row.p, p) || !bind(row.q, q) || !bind(row.r, r)) return false;
    if (!have_n) return true;
    if (n < row.n_min) return false;
    if (row.n_max != 0 && n > row.n_max) return false;
    if (!row.n_set.empty() &&
        std::find(row.n_set.begin(), row.n_set.end(), n) == row.n_set.end())
        return false;
    return true;
}

// Lines of a data file split into whitespace tokens, '#' starting a comment.
std::vector<std::vector<std::string>> read_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open data file: " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string tok; ls >> tok;) tokens.push_back(tok);
        if (!tokens.empty()) rows.push_back(std::move(tokens));
    }
    return rows;
}

unsigned long parse_ulong(const std::string& tok, const std::string& path) {
    size_t used = 0;
    unsigned long v = std::stoul(tok, &used);
    if (used != tok.size()) throw std::runtime_error("bad integer '" + tok + "' in " + path);
    return v;
}

int parse_sign(const std::string& tok, const std::string& path) {
    if (tok == "1" || tok == "+1") return 1;
    if (tok == "-1") return -1;
    throw std::runtime_error("bad sign '" + tok + "' in " + path);
}

std::string resolve(const std::string& path, const std::string& name) {
    return path.empty() ? data_file_path(name) : path;
}

} // namespace

std::string data_file_path(const std::string& name) {
#ifdef PILLAI_DATA_DIR
    return std::string(PILLAI_DATA_DIR) + "/" + name;
#else
    return "data/" + name;
#endif
}

const std::vector<GfeIdentity>& gfe_identities() {
    static const std::vector<GfeIdentity> table = {
        {1, 2, 3, 0, 3, 2},
        {7, 2, 3, 2, 5, 4},
        {13, 7, 2, 2, 3, 9},
        {17, 2, 71, 3, 7, 2},
        {11, 3, 122, 4, 5, 2},
        {1549034, 33, 15613, 2, 8, 3},
        {96222, 43, 30042907, 3, 8, 2},
        {2213459, 1414, 65, 2, 3, 7},
        {15312283, 9262, 113, 2, 3, 7},
        {76271, 17, 21063928, 3, 7, 2},
    };
    return table;
}

bool gfe_identity_holds(const GfeIdentity& id) {
    if (id.p == 0 && id.X != 1) return false;
    return side_value(id.X, id.p) + side_value(id.Y, id.q) == side_value(id.Z, id.r);
}

bool equation_is_listed_identity(const mpz_class& lhs1, const mpz_class& lhs2,
                                 const mpz_class& rhs) {
    for (const GfeIdentity& id : gfe_identities()) {
        if (rhs != side_value(id.Z, id.r)) continue;
        mpz_class vx = side_value(id.X, id.p), vy = side_value(id.Y, id.q);
        if ((lhs1 == vx && lhs2 == vy) || (lhs1 == vy && lhs2 == vx)) return true;
    }
    return false;
}

const std::vector<SignatureRow>& settled_signatures() {
    constexpr unsigned long kUnbounded = 0;
    static const std::vector<SignatureRow> table = {
        {0, 0, 0, 3, kUnbounded, {}, false},
        {0, 0, 2, 4, kUnbounded, {}, false},
        {0, 0, 3, 3, kUnbounded, {}, false},
        {2, 4, 0, 4, kUnbounded, {}, false},
        {2, 0, 4, 4, kUnbounded, {}, false},
        {2, 0, 6, 3, kUnbounded, {}, false},
        {2, 6, 0, 3, kUnbounded, {}, false},
        {3, 3, 0, 3, 1000000000UL, {}, false},
        {2, 3, 0, 1, kUnbounded, {7, 8, 9, 10, 15}, false},
        {3, 4, 5, 1, kUnbounded, {}, false},
        {5, 5, 7, 1, kUnbounded, {}, false},
        {7, 7, 5, 1, kUnbounded, {}, false},
        {5, 5, 0, 2, kUnbounded, {}, true},
    };
    return table;
}

bool signature_settled(unsigned long p, unsigned long q, unsigned long r, bool z_div5) {
    for (const SignatureRow& row : settled_signatures())
        if (row_matches(row, p, q, r, z_div5) || row_matches(row, q, p, r, z_div5))
            return true;
    return false;
}

bool signature_rules_out(unsigned long x, unsigned long y, unsigned long z, bool z_base_div5) {
    if (x == 0 || y == 0 || z == 0)
        throw domain_error("signature_rules_out: exponents must be positive");
    for (unsigned long p : divisors(x))
        for (unsigned long q : divisors(y))
            for (unsigned long r : divisors(z))
                if (signature_settled(p, q, r, z_base_div5)) return true;
    return false;
}

bool g2_filter(unsigned long g2, unsigned long z2, unsigned long beta, unsigned long z1,
               const mpz_class& c) {
    if (g2 == 0) throw domain_error("g2_filter: g2 must be positive");
    if (g2 % 2 == 0 && !(beta == 1 && z1 == 1 && z2 == 1)) return false;
    if (g2 % 3 == 0 && z2 > 2) return false;
    if (g2 % 5 == 0 && mpz_divisible_ui_p(c.get_mpz_t(), 5) && z2 != 1) return false;
    if (z2 % 2 == 0) {
        if (g2 != 1 && g2 != 3) return false;
        if (z2 > 2 && g2 != 1) return false;
    }
    if (z2 % 3 == 0 && g2 != 1) return false;
    return true;
}

bool gx_filter(unsigned long gx, unsigned long xj, const mpz_class& a) {
    if (gx == 0) throw domain_error("gx_filter: gx must be positive");
    if (gx % 3 == 0 && xj <= 1000000000UL && xj > 2) return false;
    if ((gx % 4 == 0 || gx % 6 == 0) && xj != 1) return false;
    if (gx % 5 == 0 && mpz_divisible_ui_p(a.get_mpz_t(), 5) && xj != 1) return false;
    if (xj % 2 == 0) {
        if (gx != 1 && gx != 3) return false;
        if (xj % 4 == 0 && gx != 1) return false;
    }
    if (xj % 3 == 0 && gx > 2) return false;
    if (xj >= 3 && gx % 3 == 0) return false;
    return true;
}

std::vector<XYParity> parity_cases(const mpz_class& a, const mpz_class& b) {
    if (mpz_even_p(a.get_mpz_t()) || mpz_even_p(b.get_mpz_t()))
        throw domain_error("parity_cases: a and b must be odd");
    unsigned long ra = mpz_fdiv_ui(a.get_mpz_t(), 4), rb = mpz_fdiv_ui(b.get_mpz_t(), 4);
    if (ra == 1 && rb == 3) return {{0, 1}, {1, 1}};       // y odd
    if (ra == 3 && rb == 1) return {{1, 0}, {1, 1}};       // x odd
    if (ra == 3 && rb == 3) return {{0, 1}, {1, 0}};       // x, y of opposite parity
    return {};                                             // a = b = 1 (mod 4): z = 1 forced
}

const std::vector<ParitySignatureRow>& parsig_table() {
    static const std::vector<ParitySignatureRow> table = {
        {2, 1, 2, 1, -1, -1}, {2, 1, 1, 2, -1, -1}, {1, 2, 1, 2, -1, -1},
        {1, 2, 2, 1, -1, -1}, {2, 1, 2, 1, 1, -1},  {2, 1, 1, 1, 1, -1},
        {1, 1, 2, 1, 1, -1},  {1, 1, 1, 1, 1, -1},  {1, 2, 1, 2, -1, 1},
        {1, 2, 1, 1, -1, 1},  {1, 1, 1, 2, -1, 1},  {1, 1, 1, 1, -1, 1},
    };
    return table;
}

bool parsig_admissible(const ParitySignatureRow& row) {
    auto parity_ok = [](int p) { return p == 1 || p == 2; };
    auto sign_ok = [](int s) { return s == 1 || s == -1; };
    if (!parity_ok(row.px1) || !parity_ok(row.py1) || !parity_ok(row.px2) ||
        !parity_ok(row.py2) || !sign_ok(row.sa) || !sign_ok(row.sb))
        throw domain_error("parsig_admissible: parities in {1,2}, signs in {+1,-1}");
    // a = b = 1 (mod 2^alpha) would give c^z = 2 (mod 4) and force z = 1.
    if (row.sa == 1 && row.sb == 1) return false;
    auto is_odd = [](int p) { return p == 1; };
    if (row.sa == 1 && row.sb == -1 && !(is_odd(row.py1) && is_odd(row.py2))) return false;
    if (row.sa == -1 && row.sb == 1 && !(is_odd(row.px1) && is_odd(row.px2))) return false;
    if (row.sa == -1 && row.sb == -1 &&
        !(row.px1 != row.py1 && row.px2 != row.py2))
        return false;
    if (!(is_odd(row.px1) || is_odd(row.py1)) || !(is_odd(row.px2) || is_odd(row.py2)))
        return false;
    return true;
}

bool red1_filter(const Sys2Candidate& t, const mpz_class& b) {
    if (!odd(t.x2) && !odd(t.y2)) return false;
    if (odd(t.x1) && odd(t.x2) && !odd(t.y1) && !odd(t.y2)) return false;
    if (!odd(t.x1) && !odd(t.x2) && odd(t.y1) && odd(t.y2)) return false;
    if (odd(t.x1) && odd(t.y1) && odd(t.x2) && odd(t.y2)) return false;
    if (!(t.x2 > t.x1 || t.y2 > t.y1)) return false;
    if (!(t.x2 >= t.z2 || t.y2 >= t.z2)) return false;
    if (t.x1 * t.y2 == t.x2 * t.y1) return false;
    if (t.y1 * t.z2 == t.y2) return false;
    if (t.x1 * t.z2 == t.x2) return false;
    unsigned long lo = t.y1 * t.z2 < t.y2 ? t.y2 - t.y1 * t.z2 : t.y1 * t.z2 - t.y2;
    if (std::min(t.x1, t.x2) >= lo) return false;
    if (b < 11) {
        if (t.x2 % 2 == 0 && t.z2 % 3 == 0) return false;
        if (t.x2 % 3 == 0 && t.z2 % 2 == 0) return false;
    }
    return true;
}

bool red5_filter(const Sys12Candidate& t, int a_mod4, int b_mod4, const mpz_class& b) {
    if ((a_mod4 != 1 && a_mod4 != 3) || (b_mod4 != 1 && b_mod4 != 3))
        throw domain_error("red5_filter: residues mod 4 must be 1 or 3");
    if (a_mod4 == 1 && b_mod4 == 3 && !(odd(t.y1) && odd(t.y2))) return false;
    if (a_mod4 == 3 && b_mod4 == 1 && !(odd(t.x1) && odd(t.x2))) return false;
    if (a_mod4 == 3 && b_mod4 == 3 &&
        !(odd(t.x1) != odd(t.y1) && odd(t.x2) != odd(t.y2)))
        return false;
    if (!(odd(t.x1) || odd(t.y1)) || !(odd(t.x2) || odd(t.y2))) return false;
    if (!(t.x1 < t.x2 || t.y1 < t.y2)) return false;
    if (!(t.x1 >= t.z1 || t.y1 >= t.z1)) return false;
    if (!(t.x2 >= t.z2 || t.y2 >= t.z2)) return false;
    if (t.x1 * t.y2 == t.x2 * t.y1) return false;
    if (t.x1 * t.z2 == t.x2 * t.z1) return false;
    if (t.y1 * t.z2 == t.y2 * t.z1) return false;
    unsigned long u = t.y1 * t.z2, v = t.y2 * t.z1;
    if (std::min(t.x1, t.x2) >= (u < v ? v - u : u - v)) return false;
    if (t.x1 == t.z1 && t.y1 < t.z1) return false;
    if (t.y1 == t.z1 && t.x1 < t.z1) return false;
    if (t.x2 == t.z2 && t.y2 < t.z2) return false;
    if (t.y2 == t.z2 && t.x2 < t.z2) return false;
    if (b < 11) {
        if (t.x1 % 2 == 0 && t.z1 % 3 == 0) return false;
        if (t.x1 % 3 == 0 && t.z1 % 2 == 0) return false;
        if (t.x2 % 2 == 0 && t.z2 % 3 == 0) return false;
        if (t.x2 % 3 == 0 && t.z2 % 2 == 0) return false;
    }
    return true;
}

std::vector<GfeIdentity> load_gfe_identities(const std::string& path) {
    std::string file = resolve(path, "gfe_identities.txt");
    std::vector<GfeIdentity> out;
    for (const auto& row : read_rows(file)) {
        if (row.size() != 6) throw std::runtime_error("expected 6 columns in " + file);
        GfeIdentity id;
        id.X = mpz_class(row[0]);
        id.p = parse_ulong(row[1], file);
        id.Y = mpz_class(row[2]);
        id.q = parse_ulong(row[3], file);
        id.Z = mpz_class(row[4]);
        id.r = parse_ulong(row[5], file);
        out.push_back(std::move(id));
    }
    return out;
}

std::vector<SignatureRow> load_settled_signatures(const std::string& path) {
    std::string file = resolve(path, "settled_signatures.txt");
    std::vector<SignatureRow> out;
    for (const auto& row : read_rows(file)) {
        if (row.size() < 4) throw std::runtime_error("expected pattern + condition in " + file);
        SignatureRow sig;
        auto pattern = [&](const std::string& tok) -> unsigned long {
            return tok == "N" ? 0 : parse_ulong(tok, file);
        };
        sig.p = pattern(row[0]);
        sig.q = pattern(row[1]);
        sig.r = pattern(row[2]);
        std::string cond;
        for (size_t i = 3; i < row.size(); ++i) cond += row[i];
        if (cond.ends_with(",5|Z")) {
            sig.requires_z_div5 = true;
            cond.erase(cond.size() - 4);
        }
        if (cond == "-") {
            // no shared variable
        } else if (cond.starts_with("Nin{") && cond.ends_with("}")) {
            std::istringstream ss(cond.substr(4, cond.size() - 5));
            for (std::string item; std::getline(ss, item, ',');)
                sig.n_set.push_back(parse_ulong(item, file));
        } else if (auto mid = cond.find("<=N<="); mid != std::string::npos) {
            sig.n_min = parse_ulong(cond.substr(0, mid), file);
            sig.n_max = parse_ulong(cond.substr(mid + 5), file);
        } else if (cond.starts_with("N>=")) {
            sig.n_min = parse_ulong(cond.substr(3), file);
        } else {
            throw std::runtime_error("bad condition '" + cond + "' in " + file);
        }
        out.push_back(std::move(sig));
    }
    return out;
}

std::vector<ParitySignatureRow> load_parsig_table(const std::string& path) {
    std::string file = resolve(path, "parsig.txt");
    std::vector<ParitySignatureRow> out;
    for (const auto& row : read_rows(file)) {
        if (row.size() != 6) throw std::runtime_error("expected 6 columns in " + file);
        ParitySignatureRow r;
        r.px1 = (int)parse_ulong(row[0], file);
        r.py1 = (int)parse_ulong(row[1], file);
        r.px2 = (int)parse_ulong(row[2], file);
        r.py2 = (int)parse_ulong(row[3], file);
        r.sa = parse_sign(row[4], file);
        r.sb = parse_sign(row[5], file);
        out.push_back(r);
    }
    return out;
}

std::vector<Red1Fact> load_red1_facts(const std::string& path) {
    std::string file = resolve(path, "red1_facts.txt");
    std::vector<Red1Fact> out;
    for (const auto& row : read_rows(file)) {
        if (row.size() != 4) throw std::runtime_error("expected 4 columns in " + file);
        Red1Fact f;
        f.b = parse_ulong(row[0], file);
        f.A = mpz_class(row[1]);
        f.y2 = parse_ulong(row[2], file);
        f.C = parse_ulong(row[3], file);
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace pillai
