// Regenerates data/red1_facts.txt: every solution of A^2 + b^y = C^3 with
// b in {3, 5, 7}, A >= 1, y >= 1 and C up to the cap. The sieve's parity
// clause for small b rests on the fact that none of these lifts to a pair of
// equations a^{x1} + b^{y1} = c, a^{x2} + b^{y2} = c^{z2} (checked in tests).
//
// Exhaustive by construction: for each C and y it tests whether C^3 - b^y is
// a perfect square. With the default cap every quantity fits in 64 bits.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

namespace {

using u64 = unsigned long long;

u64 isqrt(u64 n) {
    u64 r = (u64)std::sqrt((double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"enumerate A^2 + b^y = C^3 with b in {3,5,7}"};
    u64 cap = 1000000;
    std::string out_path = "data/red1_facts.txt";
    app.add_option("--cap", cap, "largest C to test")->capture_default_str();
    app.add_option("--out", out_path, "output file")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    if (cap > 2000000) { // C^3 must stay below 2^63
        std::cerr << "cap too large for 64-bit arithmetic\n";
        return 2;
    }

    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
    }
    out << "# Solutions of A^2 + b^y = C^3 with b in {3,5,7}, A >= 1, y >= 1,\n"
        << "# C <= " << cap << ". Columns: b A y C. Regenerate with gen_red1_facts.\n";

    for (u64 b : {3ULL, 5ULL, 7ULL}) {
        for (u64 C = 2; C <= cap; ++C) {
            u64 cube = C * C * C;
            u64 power = b;
            for (u64 y = 1; power < cube; ++y) {
                u64 rest = cube - power;
                u64 A = isqrt(rest);
                if (A >= 1 && A * A == rest) out << b << " " << A << " " << y << " " << C << "\n";
                if (power > cube / b) break; // next step would overflow past cube
                power *= b;
            }
        }
    }
    return 0;
}
