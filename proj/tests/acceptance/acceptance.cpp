// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chebsys/algebraic.hpp"
#include "chebsys/banded_operator.hpp"
#include "chebsys/errors.hpp"
#include "chebsys/recurrence.hpp"
#include "chebsys/roots.hpp"
#include "../support/oracles.hpp"

using namespace chebsys;
using cd = std::complex<double>;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects the first few failure messages of a criterion.
struct Tally {
    bool pass = true;
    int failures = 0;
    std::ostringstream first;
    void fail(const std::string& what) {
        pass = false;
        if (failures++ < 3) first << (failures > 1 ? "; " : "") << what;
    }
    Outcome outcome(const std::string& ok_detail) const {
        return {pass, pass ? ok_detail : std::to_string(failures) + " failure(s): " + first.str()};
    }
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

const std::vector<Rational> kFactorizationC{Rational(1), Rational(1, 2), Rational(3)};
const std::vector<Rational> kOperatorC{Rational(1), Rational(3, 2)};

Outcome factorization() {
    Tally t;
    for (int m = 1; m <= 5; ++m) {
        for (const auto& c : kFactorizationC) {
            const auto rep = verify_factorization(Params::make(m, c), 120);
            for (const auto& row : rep.rows) {
                if (!row.identity_holds || !row.degree_h_ok || !row.degree_t_ok) {
                    t.fail("m=" + std::to_string(m) + " c=" + to_string(c) + " r=" + std::to_string(row.r));
                }
            }
        }
    }
    return t.outcome("15 configurations, r <= 120, exact");
}

Outcome biorthogonality_gram() {
    Tally t;
    for (int m = 1; m <= 3; ++m) {
        for (const auto& c : kOperatorC) {
            const auto rep = gram_matrix(Params::make(m, c), 40, 40, 43 + m);
            if (rep.overflow) t.fail("overflow at m=" + std::to_string(m));
            if (!rep.is_identity()) t.fail("m=" + std::to_string(m) + " c=" + to_string(c) + " not identity");
        }
    }
    return t.outcome("41x41 Gram = I for 6 configurations, N = 43 + m");
}

Outcome jumps() {
    Tally t;
    for (int m = 1; m <= 3; ++m) {
        for (const auto& c : kOperatorC) {
            const Params p = Params::make(m, c);
            for (long i = 0; i <= 40; ++i) {
                if (!jump_check_type2(p, i)) t.fail("type II m=" + std::to_string(m) + " n=" + std::to_string(i));
                if (!jump_check_type1(p, i)) t.fail("type I m=" + std::to_string(m) + " r=" + std::to_string(i));
            }
        }
    }
    return t.outcome("n, r <= 40 for 6 configurations");
}

Outcome branch_sum_oracle() {
    constexpr Bits bits = 128;
    Tally t;
    double worst = 0.0;
    long compared = 0;
    for (int m = 1; m <= 3; ++m) {
        const Params p = Params::make(m, 1);
        const auto ts = gen_type1_scalar(p, 60);
        for (const cd z : sample_points(p, 20, 1000u + static_cast<unsigned>(m))) {
            const BigComplex zb(z, bits);
            const auto bs = solve_branches(p, zb, bits);
            if (bs.tie) {
                t.fail("tie at sampled point");
                continue;
            }
            const auto coeffs = coefficients_b(bs, p);
            for (long r = 0; r <= 60; ++r) {
                const BigComplex exact = eval(ts[static_cast<std::size_t>(r)], zb, bits);
                const double mag = abs(exact).to_double();
                if (mag <= 1e-10) continue;
                const double err = (abs(explicit_t(bs, coeffs, p, r) - exact) / abs(exact)).to_double();
                worst = std::max(worst, err);
                ++compared;
                if (err > 1e-6) t.fail("m=" + std::to_string(m) + " r=" + std::to_string(r) + " rel err " + fmt("%.3g", err));
            }
        }
    }
    return t.outcome(std::to_string(compared) + " comparisons, max rel err " + fmt("%.3g", worst) + " <= 1e-6");
}

Outcome asymptotics() {
    Tally t;
    const double target1 = (3 - std::sqrt(5.0)) / (3 + std::sqrt(5.0));
    const auto s1 = asymptotic_scan(Params::make(1, 1), cd(3, 0), 80, 128);
    const double rate1 = s1.final_decay_rate();
    if (!(std::fabs(rate1 - target1) <= 0.05)) t.fail("m=1 rate " + fmt("%.6f", rate1));

    const Params p2 = Params::make(2, 1);
    const auto bs = solve_branches(p2, BigComplex(cd(3, 0), 128), 128);
    const double target2 = (abs(bs.lambdas[1]) / abs(bs.lambdas[2])).to_double();
    const auto s2 = asymptotic_scan(p2, cd(3, 0), 80, 128);
    const double rate2 = s2.final_decay_rate();
    if (!(std::fabs(rate2 - target2) <= 0.05)) t.fail("m=2 rate " + fmt("%.6f", rate2));
    return t.outcome("m=1 rate " + fmt("%.6f", rate1) + " vs " + fmt("%.6f", target1) + ", m=2 rate " +
                     fmt("%.6f", rate2) + " vs " + fmt("%.6f", target2) + " (tol 0.05)");
}

Outcome branch_point_geometry() {
    Tally t;
    double worst = 0.0;
    for (int m = 1; m <= 4; ++m) {
        for (const auto& c : kFactorizationC) {
            const Params p = Params::make(m, c);
            const double a = star_radius(p);
            const auto bps = branch_points(p);
            if (static_cast<int>(bps.size()) != m + 1) t.fail("wrong branch point count");
            for (const auto& bp : bps) {
                const double gap = std::fabs(std::abs(bp.z) - a);
                worst = std::max(worst, gap);
                if (gap > 1e-10) t.fail("m=" + std::to_string(m) + " |z| - a = " + fmt("%.3g", gap));
            }
        }
    }
    const auto bp1 = branch_points(Params::make(1, 1));
    const double two = std::abs(bp1.front().z);
    if (std::fabs(two - 2.0) > 1e-12) t.fail("m=1 branch point modulus " + fmt("%.17g", two));
    if (std::fabs(star_radius(Params::make(1, 1)) - 2.0) > 1e-12) t.fail("m=1 star radius");
    return t.outcome("max ||z_bp| - a| = " + fmt("%.3g", worst) + " <= 1e-10; m=1 value 2 within 1e-12");
}

Outcome branch_invariants() {
    constexpr Bits bits = 128;
    Tally t;
    long points = 0;
    std::mt19937_64 gen(77);
    std::uniform_real_distribution<double> angle(0.0, 2 * M_PI), logr(2.0, 4.0);
    for (int m = 1; m <= 4; ++m) {
        for (const auto& c : kFactorizationC) {
            const Params p = Params::make(m, c);
            const double cv = c.get_d();
            std::vector<cd> zs = sample_points(p, 200, 500u + static_cast<unsigned>(m));
            std::vector<cd> far;
            for (int i = 0; i < 200; ++i) far.push_back(std::polar(std::pow(10.0, logr(gen)), angle(gen)));
            for (int pass = 0; pass < 2; ++pass) {
                for (const cd z : pass == 0 ? zs : far) {
                    ++points;
                    const auto bs = solve_branches(p, BigComplex(z, bits), bits);
                    BigComplex sum(mpq_class(0), bits), prod(mpq_class(1), bits);
                    double biggest = 0.0;
                    for (std::size_t j = 0; j < bs.lambdas.size(); ++j) {
                        if (bs.residuals[j] > 1e-10) t.fail("residual " + fmt("%.3g", bs.residuals[j]));
                        sum += bs.lambdas[j];
                        prod *= bs.lambdas[j];
                        biggest = std::max(biggest, abs(bs.lambdas[j]).to_double());
                    }
                    // The lambda^m coefficient vanishes only for m >= 2; for m = 1 the sum is z / c.
                    const cd sum_target = m == 1 ? z / cv : cd(0, 0);
                    if (std::abs(sum.to_std() - sum_target) > 1e-8 * biggest) t.fail("sum of branches");
                    const cd prod_target((m % 2 == 0 ? -1.0 : 1.0) / cv, 0);
                    if (std::abs(prod.to_std() - prod_target) > 1e-8 / cv) t.fail("product of branches");
                    if (pass == 0) {
                        if (bs.tie) t.fail("tie away from stars");
                        const auto mods = bs.moduli();
                        for (std::size_t j = 1; j < mods.size(); ++j) {
                            if (!(mods[j - 1] < mods[j])) t.fail("ordering");
                        }
                    } else {
                        const double lhs = std::abs(z * bs.lambdas[0].to_std() - 1.0);
                        if (lhs > 10.0 / std::abs(z)) t.fail("|z l0 - 1| = " + fmt("%.3g", lhs));
                    }
                }
            }
        }
    }
    return t.outcome(std::to_string(points) + " points over 12 configurations");
}

Outcome root_structure() {
    Tally t;
    const Params p2 = Params::make(2, 1);
    const auto recs = type1_records(p2, 6);
    const auto r6 = roots_of_t(recs.back(), p2, 128);
    if (r6.t_roots.size() != 3) t.fail("t_6 root count");
    for (const cd w : {cd(-1, 0), std::polar(1.0, M_PI / 3), std::polar(1.0, -M_PI / 3)}) {
        bool hit = false;
        for (const auto& root : r6.t_roots) hit = hit || std::abs(root.value - w) <= 1e-10;
        if (!hit) t.fail("cube root of -1 missing");
    }
    double worst_pair = 0.0;
    long tested = 0;
    for (int m = 1; m <= 3; ++m) {
        const Params p = Params::make(m, 1);
        for (const auto& rec : type1_records(p, 90)) {
            if (rec.t.is_zero()) continue;
            const auto rep = roots_of_t(rec, p, 128);
            ++tested;
            if (static_cast<long>(rep.t_roots.size()) != rec.index.d - rec.index.k) {
                t.fail("root count m=" + std::to_string(m) + " r=" + std::to_string(rec.r));
            }
            const double pair = orbit_pairing_error(rep.t_roots, m);
            worst_pair = std::max(worst_pair, pair);
            if (pair > 1e-8) t.fail("orbit pairing m=" + std::to_string(m) + " r=" + std::to_string(rec.r));
        }
    }
    return t.outcome("t_6 roots = cube roots of -1; " + std::to_string(tested) + " polynomials, max pairing error " +
                     fmt("%.3g", worst_pair));
}

Outcome chebyshev_reduction() {
    Tally t;
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    double worst = 0.0;
    for (const Rational c : {Rational(1), Rational(4)}) {
        const auto ts = gen_type1_scalar(Params::make(1, c), 40);
        const double sc = std::sqrt(c.get_d());
        for (int s = 0; s < 20; ++s) {
            const double u = dist(gen);
            for (int n = 0; n <= 40; ++n) {
                const Rational x(2.0 * sc * u);
                const double lhs = std::pow(sc, n) * eval(ts[static_cast<std::size_t>(n)], x).get_d();
                const double U = oracle::chebyshev_u(n, u);
                const double err = std::fabs(lhs - U) / std::max(1.0, std::fabs(U));
                worst = std::max(worst, err);
                if (err > 1e-9) t.fail("n=" + std::to_string(n) + " u=" + fmt("%.6f", u));
            }
        }
    }
    return t.outcome("max scaled error " + fmt("%.3g", worst) + " <= 1e-9");
}

Outcome reports() {
    std::ostringstream text;
    for (int m = 1; m <= 3; ++m) {
        const Params p = Params::make(m, 1);
        std::vector<Poly> hs;
        for (const auto& rec : type1_records(p, 60)) hs.push_back(rec.h);
        const auto rep = verify_h_recurrence(hs, p);
        std::printf("    sign table m=%d:", m);
        for (const auto& [key, e] : rep.table) {
            std::printf(" [k%s0 ell%s0 stated %+d observed %+d (+only %ld, -only %ld, either %ld)]", e.k_zero ? "=" : "!=",
                        e.ell_zero ? "=" : "!=", e.stated_sign, e.observed_sign(), e.plus_only, e.minus_only, e.both);
        }
        std::printf("\n");
        const auto probe = conjecture_probe(p, 60, 128);
        std::printf("    real-root probe m=%d r<=60: %s (max |Im y|/|y| = %.3g)\n", m, probe.classification.c_str(),
                    probe.max_rel_imag);
    }
    for (int m = 1; m <= 2; ++m) {
        const auto att = attraction_study(Params::make(m, 1), {30, 60, 90}, 128);
        std::printf("    attraction m=%d r={30,60,90}: mean %s, max %s (max distances", m, att.mean_trend.c_str(),
                    att.max_trend.c_str());
        for (const auto& row : att.rows) std::printf(" %.3g", row.max_star_distance);
        std::printf(")\n");
    }
    return {true, "sign tables, probe classifications and attraction verdicts emitted"};
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "factorization", factorization},
        {2, "biorthogonality", biorthogonality_gram},
        {3, "jump identities", jumps},
        {4, "branch-sum oracle", branch_sum_oracle},
        {5, "strong asymptotics", asymptotics},
        {6, "branch-point geometry", branch_point_geometry},
        {7, "branch invariants", branch_invariants},
        {8, "root structure", root_structure},
        {9, "m=1 Chebyshev reduction", chebyshev_reduction},
        {10, "reports", reports},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2d %-24s %6.2fs  %s\n", out.pass ? "PASS" : "FAIL", c.id, c.name, secs, out.detail.c_str());
        std::fflush(stdout);
        failed += out.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
