#include "pillai/gap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pillai {

namespace {

bool sol_less(const Solution& s, const Solution& t) {
    if (s.z != t.z) return s.z < t.z;
    if (s.x != t.x) return s.x < t.x;
    return s.y < t.y;
}

mpz_class pow_of(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// gmpxx has no long long constructors; exponent arithmetic fits in long
mpz_class mz(long long v) { return mpz_class(static_cast<long>(v)); }

Real t_of(const mpz_class& P, const mpz_class& Q) {
    Real lp = log_mpz<Real>(P), lq = log_mpz<Real>(Q);
    return std::min(lp, lq) / std::max(lp, lq);
}

// "lhs < rhs" with the slack pushed toward accepting, so genuine solutions are
// never rejected by rounding. lhs is given as a logarithm, rhs as a value.
bool log_lt(Real lhs_log, Real rhs) {
    if (!(rhs > 0)) return false;
    return lhs_log <= std::log(widen(rhs));
}

} // namespace

void sort_solutions(std::vector<Solution>& sols) { std::sort(sols.begin(), sols.end(), sol_less); }
void sort_solutions(std::array<Solution, 3>& sols) { std::sort(sols.begin(), sols.end(), sol_less); }

PairData make_pair_data(const Solution& s, const Solution& t) {
    PairData pd;
    pd.s1 = s;
    pd.s2 = t;
    if (sol_less(t, s)) std::swap(pd.s1, pd.s2);
    pd.cross = (long long)pd.s1.x * (long long)pd.s2.y - (long long)pd.s2.x * (long long)pd.s1.y;
    pd.dz = (long long)pd.s2.z - (long long)pd.s1.z;
    pd.dx = (long long)pd.s2.x - (long long)pd.s1.x;
    pd.dy = (long long)pd.s2.y - (long long)pd.s1.y;
    return pd;
}

TripleOrdering compute_ordering(const std::array<Solution, 3>& sols) {
    TripleOrdering o;
    o.xi = {0, 1, 2};
    std::stable_sort(o.xi.begin(), o.xi.end(),
                     [&](int p, int q) { return sols[p].x < sols[q].x; });
    o.yi = {0, 1, 2};
    std::stable_sort(o.yi.begin(), o.yi.end(),
                     [&](int p, int q) { return sols[p].y < sols[q].y; });
    o.dz = sols[1].z - sols[0].z;
    o.dx = sols[o.xi[1]].x - sols[o.xi[0]].x;
    o.dy = sols[o.yi[1]].y - sols[o.yi[0]].y;
    o.g2 = std::gcd(sols[1].x, sols[1].y);
    o.gx = std::gcd(sols[o.xi[1]].y, sols[o.xi[1]].z);
    o.gy = std::gcd(sols[o.yi[1]].x, sols[o.yi[1]].z);
    return o;
}

bool z_lower_constraint(unsigned long alpha, unsigned long beta, unsigned long z) {
    return (beta == 1 && z == 1) || beta * z >= alpha;
}

bool pair_2adic_upper(unsigned long alpha, unsigned long beta, const PairData& pd) {
    if (pd.cross == 0) throw domain_error("pair_2adic_upper: vanishing cross term");
    unsigned long minz = std::min(pd.s1.z, pd.s2.z);
    unsigned long nu = vp(2, mz(pd.cross));
    return beta * minz <= alpha + nu;
}

CheckReport exact_z_case(unsigned long alpha_a, unsigned long alpha_b, unsigned long beta,
                         const PairData& pd) {
    CheckReport r;
    unsigned long alpha = std::min(alpha_a, alpha_b);
    if (beta * pd.s1.z == 1 || beta * pd.s2.z == 1) {
        r.applicable = false;
        r.detail = "needs beta*Z != 1 for both solutions";
        return r;
    }
    if (pd.s1.x % 2 == pd.s2.x % 2) {
        r.applicable = false;
        r.detail = "needs X !≡ X' (mod 2)";
        return r;
    }
    r.ok = beta * pd.s1.z == alpha || beta * pd.s2.z == alpha;
    return r;
}

CheckReport dagger_constraint(unsigned long alpha, unsigned long beta,
                              std::array<Solution, 3> sols) {
    sort_solutions(sols);
    CheckReport r;
    bool x_same = sols[0].x % 2 == sols[1].x % 2 && sols[1].x % 2 == sols[2].x % 2;
    bool y_same = sols[0].y % 2 == sols[1].y % 2 && sols[1].y % 2 == sols[2].y % 2;
    if (x_same && y_same) {
        r.applicable = false;
        r.detail = "no pair differs in x- or y-parity";
        return r;
    }
    unsigned long z1 = sols[0].z;
    r.ok = (beta == 1 && z1 == 1) || beta * z1 == alpha;
    return r;
}

bool lemma_two_check(const mpz_class& A, const mpz_class& B, const mpz_class& C,
                     const PairData& pd) {
    mpz_class mod = pow_of(C, std::min(pd.s1.z, pd.s2.z));
    if (mod <= 2) return true; // every unit is ±1 mod 2
    if (pd.cross == 0) return false;
    mpz_class e = mz(std::llabs(pd.cross));
    for (const mpz_class* base : {&A, &B}) {
        mpz_class r = mod_pow(*base, e, mod);
        if (r != 1 && r != mod - 1) return false;
    }
    return true;
}

bool ele1_divisibility(const OrderData& order, unsigned long nprime,
                       std::optional<mpz_class> t) {
    if (order.n == 0) throw domain_error("ele1_divisibility: empty order data");
    if (nprime == 0) throw domain_error("ele1_divisibility: n' must be positive");
    mpz_class np(nprime);
    if (!t) return mpz_divisible_ui_p(np.get_mpz_t(), order.n) != 0;
    if (*t <= 0) throw domain_error("ele1_divisibility: t must be positive");
    mpz_class g = gcd(*t, order.f);
    mpz_class modulus = (*t / g) * order.n;
    return mpz_divisible_p(np.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

bool Y2Report::divides(unsigned long xprime) const {
    mpz_class xp(xprime);
    if (part1_applicable && !mpz_divisible_p(xp.get_mpz_t(), d1.get_mpz_t())) return false;
    if (part2_applicable && !mpz_divisible_p(xp.get_mpz_t(), d2.get_mpz_t())) return false;
    return true;
}

Y2Report y2_divisor(const mpz_class& C, unsigned long Z, unsigned long Zprime,
                    const mpz_class& other_base) {
    Y2Report r;
    if (Z >= Zprime) return r;
    mpz_class cz = pow_of(C, Z);
    bool p1 = cz > 2;
    bool p2 = cz % 4 != 2;
    if (!p1 && !p2) return r;
    OrderData od = order_data(other_base, cz);
    if (p1) {
        r.part1_applicable = true;
        r.d1 = gcd(C, od.f);
    }
    if (p2) {
        r.part2_applicable = true;
        r.d2 = gcd(pow_of(C, Zprime - Z), od.f);
    }
    return r;
}

GapReport improved_gap_check(const mpz_class& A, const mpz_class& B, const mpz_class& C,
                             int lambda, std::array<Solution, 3> sols, GapPart part) {
    if (lambda != 1 && lambda != -1) throw domain_error("improved_gap_check: lambda must be ±1");
    sort_solutions(sols);
    GapReport rep;
    const Solution &s1 = sols[0], &s2 = sols[1], &s3 = sols[2];
    if (!(s1.z < s2.z && s2.z <= s3.z)) {
        rep.detail = "needs Z1 < Z2 <= Z3";
        return rep;
    }
    mpz_class cz1 = pow_of(C, s1.z);
    bool is2mod4 = cz1 % 4 == 2;
    if (part == GapPart::I && !(is2mod4 && cz1 > 2)) {
        rep.detail = "part I needs C^{Z1} ≡ 2 (mod 4) and C^{Z1} > 2";
        return rep;
    }
    if (part == GapPart::II && is2mod4) {
        rep.detail = "part II needs C^{Z1} !≡ 2 (mod 4)";
        return rep;
    }
    rep.applicable = true;

    rep.cond_ok = !is_perfect_power(A) && !is_perfect_power(B) && !is_perfect_power(C);
    if (lambda == 1)
        rep.cond_ok = rep.cond_ok && C % 2 == 0 && C > 2 && std::max(A, B) >= 11;
    else
        rep.cond_ok = rep.cond_ok && A % 2 == 0 && A > 2 && std::max(B, C) >= 11;

    unsigned long G2 = std::gcd(s2.x, s2.y);
    long long cross = (long long)s2.x * (long long)s3.y - (long long)s3.x * (long long)s2.y;
    rep.chi = (s1.z > 1 && (lambda == 1 || C > std::max(A, B))) ? 2 : 1;

    mpz_class lhs = part == GapPart::I ? C : pow_of(C, s2.z - s1.z);
    mpz_class target = G2 * mz(cross);
    rep.divisibility_ok = mpz_divisible_p(target.get_mpz_t(), lhs.get_mpz_t()) != 0;

    mpz_class den = rep.chi * cz1 - 1;
    Real l_den = log_mpz<Real>(den);
    Real l_lhs = log_mpz<Real>(lhs);
    if (cross != 0) {
        Real mn = std::min(s2.x * log_mpz<Real>(B), s2.y * log_mpz<Real>(A));
        rep.inequality_ok = log_lt(l_lhs, mn / l_den * (Real)std::llabs(cross));
    }

    rep.k_applicable = lambda == 1 || G2 > 1;
    if (rep.k_applicable) {
        rep.K = s1.z * log_mpz<Real>(C) / l_den;
        if (lambda == -1) rep.K *= (Real)G2 / (Real)(G2 - 1);
        if (cross != 0) {
            Real rhs = rep.K * t_of(A, B) * ((Real)s2.z / (Real)s1.z) * (Real)std::llabs(cross);
            rep.k_inequality_ok = log_lt(l_lhs, rhs);
        }
    }
    return rep;
}

XYBounds g2_upper_a_bounds(const mpz_class& A, const mpz_class& B, const mpz_class& C,
                           const Solution& sol, unsigned long G) {
    XYBounds b;
    if (G <= 1) return b;
    b.applicable = true;
    Real f = (Real)G / (Real)(G - 1) * log_mpz<Real>(C) * (Real)sol.z;
    b.x_bound = f / log_mpz<Real>(A);
    b.y_bound = f / log_mpz<Real>(B);
    return b;
}

namespace {

// Smallest integer of which n is a perfect power (n itself when it is none).
mpz_class primitive_base(const mpz_class& n) {
    auto w = is_perfect_power(n);
    return w ? w->base : n;
}

// sign of u*log C - v*log B, decided by comparing the integer powers C^|u|, B^|v|.
int cmp_linear(const mpz_class& C, const mpz_class& B, const mpz_class& u, const mpz_class& v) {
    int su = sgn(u), sv = sgn(v);
    if (su == 0 && sv == 0) return 0;
    if (su >= 0 && sv <= 0) return 1;
    if (su <= 0 && sv >= 0) return -1;
    bool neg = su < 0;
    mpz_class uu = abs(u), vv = abs(v);
    if (!uu.fits_ulong_p() || !vv.fits_ulong_p() || uu > 1000000 || vv > 1000000)
        throw domain_error("cf_convergent_check: exponents out of the supported range");
    int s = cmp(pow_of(C, uu.get_ui()), pow_of(B, vv.get_ui()));
    return neg ? -s : s;
}

} // namespace

bool cf_convergent_check(unsigned long p, unsigned long q, const mpz_class& C,
                         const mpz_class& B) {
    if (p == 0 || q == 0) throw domain_error("cf_convergent_check: p, q must be positive");
    if (C <= 1 || B <= 1) throw domain_error("cf_convergent_check: bases must exceed 1");
    if (primitive_base(C) == primitive_base(B))
        throw domain_error("cf_convergent_check: log C/log B is rational");
    unsigned long g = std::gcd(p, q);
    p /= g;
    q /= g;

    // xi_k = (a11*xi + a12)/(a21*xi + a22) with xi = log C/log B; the denominator
    // stays positive along the iteration.
    mpz_class a11 = 1, a12 = 0, a21 = 0, a22 = 1;
    auto xi_ge = [&](const mpz_class& m) {
        return cmp_linear(C, B, a11 - m * a21, m * a22 - a12) >= 0;
    };
    mpz_class hm1 = 1, hm2 = 0, km1 = 0, km2 = 1; // convergent recurrence seeds
    for (int digits = 0; digits < 1000; ++digits) {
        mpz_class d = 0;
        if (xi_ge(1)) {
            mpz_class lo = 1;
            while (xi_ge(2 * lo)) lo *= 2;
            mpz_class hi = 2 * lo; // xi_k in [lo, hi)
            while (hi - lo > 1) {
                mpz_class mid = (lo + hi) / 2;
                (xi_ge(mid) ? lo : hi) = mid;
            }
            d = lo;
        }
        mpz_class h = d * hm1 + hm2, k = d * km1 + km2;
        if (k > q) return false;
        if (k == q && h == p) return true;
        hm2 = hm1; hm1 = h;
        km2 = km1; km1 = k;
        // xi_{k+1} = 1/(xi_k - d)
        mpz_class n11 = a21, n12 = a22;
        mpz_class n21 = a11 - d * a21, n22 = a12 - d * a22;
        a11 = n11; a12 = n12; a21 = n21; a22 = n22;
    }
    throw std::runtime_error("cf_convergent_check: continued fraction did not settle");
}

Real cf_gap_lower(unsigned long Z, unsigned long Y, const mpz_class& C, const mpz_class& B) {
    if (Z == 0) throw domain_error("cf_gap_lower: Z must be positive");
    if (C <= 1 || B <= 1) throw domain_error("cf_gap_lower: bases must exceed 1");
    if (pow_of(B, Y) >= pow_of(C, Z)) throw domain_error("cf_gap_lower: needs Y/Z < log C/log B");
    Real gap = log_mpz<Real>(C) / log_mpz<Real>(B) - (Real)Y / (Real)Z;
    if (!(gap > 0)) return std::numeric_limits<Real>::infinity();
    return 1 / ((Real)Z * gap);
}

bool DisjunctionReport::any_hold() const {
    for (const auto& [name, ok] : branches)
        if (ok) return true;
    return false;
}

bool DisjunctionReport::all_hold() const {
    for (const auto& [name, ok] : branches)
        if (!ok) return false;
    return true;
}

bool DisjunctionReport::branch(const std::string& name) const {
    for (const auto& [n, ok] : branches)
        if (n == name) return ok;
    throw std::out_of_range("DisjunctionReport: no branch named " + name);
}

DisjunctionReport equal_z_gap_check(const mpz_class& A, const mpz_class& B,
                                    const mpz_class& C, int lambda,
                                    std::array<Solution, 3> sols) {
    if (lambda != 1 && lambda != -1) throw domain_error("equal_z_gap_check: lambda must be ±1");
    sort_solutions(sols);
    DisjunctionReport rep;
    const Solution &s1 = sols[0], &s2 = sols[1], &s3 = sols[2];
    if (!(s1.z == s2.z && s2.z < s3.z)) {
        rep.detail = "needs Z1 = Z2 < Z3";
        return rep;
    }
    if (lambda == -1 && !(A < C)) {
        rep.detail = "lambda = -1 form needs A < C";
        return rep;
    }
    rep.applicable = true;

    long long Z2 = s2.z, Z3 = s3.z;
    mpz_class cz2 = pow_of(C, s2.z);
    auto cross_max = [&](bool on_x) {
        long long m = 0;
        for (const Solution* t : {&s1, &s2}) {
            long long v3 = on_x ? (long long)s3.x : (long long)s3.y;
            long long vt = on_x ? (long long)t->x : (long long)t->y;
            m = std::max(m, std::llabs(vt * Z3 - v3 * Z2));
        }
        return m;
    };

    if (lambda == 1) {
        Real lmin = log_mpz<Real>(std::min(A, B));
        rep.branches.emplace_back("lam1:small-z3",
                                  log_lt(log_mpz<Real>(C) * Z2 / 2, 2 / lmin * (Real)Z3));
        // C^{Z2/2}/Z2 < M  ⟺  C^{Z2} < (Z2*M)^2, exactly
        long long M = std::max(cross_max(true), cross_max(false));
        mpz_class rhs = mz(Z2) * mz(M);
        rep.branches.emplace_back("lam1:cross", cz2 < rhs * rhs);
        return rep;
    }

    long long Mx = cross_max(true), My = cross_max(false);
    if (s3.x > std::max(s1.x, s2.x)) {
        rep.branches.emplace_back("lam-1:i:x", cz2 < mz(Z2) * mz(Mx));
        mpz_class ry = mz(Z2) * mz(My);
        rep.branches.emplace_back("lam-1:i:y", cz2 < ry * ry);
        rep.branches.emplace_back(
            "lam-1:i:x3", log_lt(log_mpz<Real>(C) * Z2 / 2, 2 * (Real)s3.x / log_mpz<Real>(C)));
    } else {
        mpz_class gx3(std::gcd(s3.x, s3.z)), gy3(std::gcd(s3.y, s3.z));
        rep.branches.emplace_back("lam-1:ii:x", cz2 < gx3 * mz(Mx));
        long long dx12 = std::llabs((long long)s1.x - (long long)s2.x);
        mpz_class rhs = mz(Z2) * mz(Z2) * mz(dx12) * gy3 * mz(My);
        rep.branches.emplace_back("lam-1:ii:y", cz2 < rhs);
    }
    return rep;
}

DisjunctionReport ineq_z1z2_filters(const TripleContext& tc) {
    DisjunctionReport rep;
    auto sols = tc.sols;
    sort_solutions(sols);
    TripleOrdering ord = compute_ordering(sols);
    const Solution &s1 = sols[0], &s2 = sols[1], &s3 = sols[2];
    Real la = log_mpz<Real>(tc.a), lb = log_mpz<Real>(tc.b), lc = log_mpz<Real>(tc.c);
    Real tab = std::min(la, lb) / std::max(la, lb);

    mpz_class cz1_mod4 = mod_pow(tc.c, s1.z, mpz_class(4));

    if (ord.dz > 0 && cz1_mod4 == 2) {
        BoundContext bctx;
        bctx.alpha = tc.alpha;
        bctx.beta = 1;
        bctx.m2_base = tc.m2_base;
        Real H = h_bound(bctx, tc.c, tc.c, tc.c);
        Real zH = (Real)s2.z * H;
        unsigned long g2p = mpz_class(gcd(tc.c, mpz_class(ord.g2))).get_ui();
        Real g2fac = (Real)(g2p * g2p) / (Real)ord.g2;
        Real e = (Real)((long long)tc.alpha + 1 - (long long)s2.z);
        rep.branches.emplace_back("c2mod4:pow2", log_lt(lc, std::exp2(e) * g2fac * zH));
        rep.branches.emplace_back("c2mod4:g2", log_lt(lc, g2fac * zH));
        Real lcm1 = log_mpz<Real>(tc.c - 1);
        rep.branches.emplace_back("c2mod4:t", log_lt(lc, lc / lcm1 * tab * (Real)s2.z * zH));
    }
    if (ord.dz > 0 && cz1_mod4 == 0) {
        Real F = lc * lc / (la * lb) * (Real)s2.z * (Real)s3.z;
        mpz_class cdz = pow_of(tc.c, ord.dz);
        unsigned long g2p = mpz_class(gcd(cdz, mpz_class(ord.g2))).get_ui();
        Real g2fac = (Real)(g2p * g2p) / (Real)ord.g2;
        Real lhs = (Real)ord.dz * lc;
        Real e = (Real)tc.alpha - (Real)(tc.beta * s1.z);
        rep.branches.emplace_back("c0mod4:pow2", log_lt(lhs, std::exp2(e) * g2fac * F));
        int chi = s1.z > 1 ? 2 : 1;
        mpz_class den = chi * pow_of(tc.c, s1.z) - 1;
        Real K = (Real)s1.z * lc / log_mpz<Real>(den);
        rep.branches.emplace_back(
            "c0mod4:K", log_lt(lhs, K * tab * ((Real)s2.z / (Real)s1.z) * F));
    }

    // base/exponent gaps, for (a, x-ordering) and its (b, y-ordering) mirror
    struct Side {
        const char* tag;
        const mpz_class *base, *other; // "a" and "b" roles in the inequality
        std::array<int, 3> perm;
        unsigned long d, g;
    };
    for (const Side& sd : {Side{"a", &tc.a, &tc.b, ord.xi, ord.dx, ord.gx},
                           Side{"b", &tc.b, &tc.a, ord.yi, ord.dy, ord.gy}}) {
        if (sd.d == 0) continue;
        const Solution &sj = sols[sd.perm[1]], &sk = sols[sd.perm[2]];
        unsigned long ej = sd.tag[0] == 'a' ? sj.x : sj.y;
        Real lbase = log_mpz<Real>(*sd.base), lother = log_mpz<Real>(*sd.other);
        mpz_class powd = pow_of(*sd.base, sd.d);
        unsigned long gp = mpz_class(gcd(powd, mpz_class(sd.g))).get_ui();
        Real lhs = (Real)sd.d * lbase;
        std::string tag(sd.tag);
        rep.branches.emplace_back(
            tag + ":i", log_lt(lhs, (Real)(gp * gp) / (Real)sd.g / lother * lc *
                                        (Real)sj.z * (Real)sk.z));
        if (sd.g > 1) {
            rep.branches.emplace_back(
                tag + ":ii", log_lt(lhs, (Real)(gp * gp) / (Real)(sd.g - 1) * lbase / lother *
                                             (Real)ej * (Real)sk.z));
            if (*sd.base > 2) {
                Real gfac = (Real)sd.g / (Real)(sd.g - 1);
                Real lbm1 = log_mpz<Real>(*sd.base - 1);
                Real tbc = t_of(*sd.other, tc.c);
                Real poly = (Real)(ej + sd.d + sd.d * sd.d);
                rep.branches.emplace_back(
                    tag + ":iii", log_lt(lhs, gfac * gfac * lbase * lbase / (lbm1 * lother) *
                                                  tbc * poly * (Real)sk.z));
            }
        }
    }

    if (ord.dz == 0) {
        const mpz_class& mn = std::min(tc.a, tc.b);
        Real lmin = log_mpz<Real>(mn);
        rep.branches.emplace_back("z1z2:c", log_lt((Real)s1.z * lc / 2, lc / lmin * (Real)s1.z *
                                                                            (Real)s1.z * (Real)s3.z));
        rep.branches.emplace_back("z1z2:minab", pow_of(mn, 4) < pow_of(tc.c, s1.z));
    }

    rep.applicable = !rep.branches.empty();
    if (!rep.applicable) rep.detail = "no lemma hypotheses met (dz>0 with odd c, or dx=dy=0)";
    return rep;
}

} // namespace pillai
