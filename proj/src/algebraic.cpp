#include "chebsys/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "chebsys/errors.hpp"
#include "chebsys/polyroots.hpp"

namespace chebsys {

namespace {

std::string describe(const BigComplex& z) {
    std::ostringstream os;
    os << "z = (" << z.re.to_string(17) << ", " << z.im.to_string(17) << ")";
    return os.str();
}

std::vector<BigComplex> lambda_polynomial(const Params& p, const BigComplex& z, Bits bits) {
    std::vector<BigComplex> coeffs;
    coeffs.reserve(static_cast<std::size_t>(p.m) + 2);
    coeffs.emplace_back(std::complex<double>(1.0, 0.0), bits);
    coeffs.push_back(-z.with_precision(bits));
    for (int i = 2; i <= p.m; ++i) coeffs.emplace_back(bits);
    coeffs.emplace_back(p.c, bits);
    return coeffs;
}

double relative_gap(const BigFloat& lo, const BigFloat& hi) {
    if (hi.is_zero()) return 0.0;
    return ((hi - lo) / hi).to_double();
}

double unit_uniform(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

} // namespace

std::vector<double> BranchSet::moduli() const {
    std::vector<double> out;
    out.reserve(lambdas.size());
    for (const auto& l : lambdas) out.push_back(abs(l).to_double());
    return out;
}

double branch_tolerance(Bits bits) { return std::pow(10.0, 2.0 - 0.3 * static_cast<double>(bits)); }

BranchSet solve_branches(const Params& p, const BigComplex& z, Bits bits) {
    const Bits work = 2 * bits + 32;
    const auto coeffs = lambda_polynomial(p, z, work);
    AberthResult roots = aberth_roots(coeffs, work);

    BranchSet bs;
    bs.z = z.with_precision(work);
    bs.precision = bits;

    std::vector<std::pair<BigFloat, BigComplex>> keyed;
    for (auto& l : roots.roots) {
        BigFloat mod = abs(l);
        keyed.emplace_back(std::move(mod), std::move(l));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
        if (x.first == y.first) return arg(x.second) < arg(y.second);
        return x.first < y.first;
    });

    const double tol = branch_tolerance(bits);
    const BigFloat c(p.c, work);
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        const BigComplex& l = keyed[i].second;
        BigComplex value(work), deriv(work);
        horner_with_derivative(coeffs, l, value, deriv);
        const double residual = abs(value).to_double();
        const double scale = 1.0 + (abs(bs.z) * keyed[i].first).to_double() +
                             (c * abs(pow(l, p.m + 1))).to_double();
        if (!(residual <= tol * scale)) {
            std::ostringstream os;
            os << "branch solver did not converge at " << describe(z) << " (residual " << residual << ")";
            throw SolverDivergence(os.str());
        }
        bs.residuals.push_back(residual);
        if (i > 0 && relative_gap(keyed[i - 1].first, keyed[i].first) < kTieTolerance) bs.tie = true;
        bs.lambdas.push_back(l);
    }
    return bs;
}

BranchSet solve_branches(const Params& p, std::complex<double> z, Bits bits) {
    return solve_branches(p, BigComplex(z, std::max(bits, kDoubleBits)), bits);
}

BranchCoefficients coefficients_b(const BranchSet& bs, const Params& p) {
    if (bs.tie) throw DegenerateBranches("branch moduli tie at " + describe(bs.z));
    const Bits bits = bs.lambdas.front().precision();
    const BigComplex one(std::complex<double>(1.0, 0.0), bits);
    const BigFloat c(p.c, bits);
    const BigFloat cm(p.c * p.m, bits);

    BranchCoefficients out;
    double worst = 0.0;
    for (std::size_t j = 0; j < bs.lambdas.size(); ++j) {
        BigComplex prod = one;
        for (std::size_t k = 0; k < bs.lambdas.size(); ++k) {
            if (k != j) prod = prod * (bs.lambdas[j] - bs.lambdas[k]);
        }
        out.b.push_back(one / prod);
        const BigComplex lhs = c * (bs.lambdas[j] * prod);
        const BigComplex rhs = cm * pow(bs.lambdas[j], p.m + 1) - one;
        worst = std::max(worst, (abs(lhs - rhs) / abs(rhs)).to_double());
    }
    out.identity_rel_error = worst;
    out.identity_ok = worst <= 1e-8;
    return out;
}

BigComplex explicit_t(const BranchSet& bs, const BranchCoefficients& coeffs, const Params& p, long r) {
    const Bits bits = bs.lambdas.front().precision();
    BigComplex sum(bits);
    for (std::size_t j = 0; j < bs.lambdas.size(); ++j) {
        sum += coeffs.b[j] * pow(bs.lambdas[j], r + p.m);
    }
    return sum;
}

BigComplex explicit_t(const Params& p, long r, const BigComplex& z, Bits bits) {
    if (r < -p.m) throw InvalidInput("explicit_t needs r >= -m");
    const BranchSet bs = solve_branches(p, z, bits);
    const BranchCoefficients coeffs = coefficients_b(bs, p);
    return explicit_t(bs, coeffs, p, r).with_precision(bits);
}

std::complex<double> explicit_t(const Params& p, long r, std::complex<double> z, Bits bits) {
    return explicit_t(p, r, BigComplex(z, std::max(bits, kDoubleBits)), bits).to_std();
}

namespace {

// On S_m (geometrically) with the two largest moduli tied. The geometric test
// alone is too coarse for m = 1, where S_1 is the whole real axis but only
// [-a, a] is a cut; the modulus test alone misfires at large |z|, where the
// m large branches have nearly equal moduli.
bool on_dominant_cut(const Params& p, const BranchSet& bs) {
    const std::complex<double> z = bs.z.to_std();
    const StarGeometry g = make_star_geometry(p);
    if (distance_to_rays(z, g.rays_m()) > 1e-9 * std::max(1.0, std::abs(z))) return false;
    return relative_gap(abs(bs.lambdas[bs.lambdas.size() - 2]), abs(bs.lambdas.back())) < kDominantTieTolerance;
}

BigComplex limit_from_branches(const Params& p, const BranchSet& bs) {
    const auto& top = bs.lambdas.back();
    if (on_dominant_cut(p, bs)) {
        throw OnStarSet("|lambda_{m-1}| = |lambda_m| at " + describe(bs.z) + ": point lies on the cut of lambda_m");
    }
    const Bits bits = top.precision();
    const BigComplex one(std::complex<double>(1.0, 0.0), bits);
    const BigComplex c(p.c, bits);
    const BigComplex cm(Rational(p.c * p.m), bits);
    return c / (cm - one / pow(top, p.m + 1));
}

} // namespace

BigComplex limit_L(const Params& p, const BigComplex& z, Bits bits) {
    return limit_from_branches(p, solve_branches(p, z, bits)).with_precision(bits);
}

std::complex<double> limit_L(const Params& p, std::complex<double> z, Bits bits) {
    return limit_L(p, BigComplex(z, std::max(bits, kDoubleBits)), bits).to_std();
}

double AsymptoticScan::final_decay_rate() const {
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        if (it->r >= window && !it->noise_limited) return it->decay_rate;
    }
    return 0.0;
}

AsymptoticScan asymptotic_scan(const Params& p, std::complex<double> z, long r_max, Bits bits) {
    if (r_max < 0) throw InvalidInput("asymptotic_scan needs rMax >= 0");
    AsymptoticScan scan;
    scan.z = z;
    scan.window = static_cast<long>(p.m) * (p.m + 1);

    const BranchSet coarse = solve_branches(p, z, bits);
    const BigFloat top = abs(coarse.lambdas.back());
    const BigFloat next = abs(coarse.lambdas[coarse.lambdas.size() - 2]);
    if (on_dominant_cut(p, coarse)) {
        throw OnStarSet("asymptotic scan requested on the cut of lambda_m at " + describe(coarse.z));
    }
    scan.branch_ratio = (next / top).to_double();

    TypeIGenerator gen(p);
    const auto& ts = gen.prefix(r_max);

    // Enough bits to resolve e_r down to ratio^rMax, plus headroom for the
    // Horner cancellation.
    Bits work = std::max<Bits>(bits, 96 + static_cast<Bits>(std::ceil(
                                               static_cast<double>(r_max) * -std::log2(scan.branch_ratio))));
    constexpr Bits kMaxBits = 16384;
    while (true) {
        const BranchSet bs = solve_branches(p, z, work);
        const BigComplex L = limit_from_branches(p, bs);
        const BigComplex lam = bs.lambdas.back().with_precision(work);
        const BigComplex zz(z, work);
        const BigFloat mod_z = abs(zz);
        const BigFloat unit = ldexp(BigFloat(1.0, work), -work);

        scan.rows.clear();
        bool limited = false;
        std::vector<double> log2_err;
        for (long r = 0; r <= r_max; ++r) {
            const Poly& t = ts[static_cast<std::size_t>(r)];
            const BigComplex lam_r = pow(lam, r);
            const BigComplex q = eval(t, zz, work) / lam_r;
            const BigFloat e = abs(q - L);
            const BigFloat horner_scale = abs_eval(t, mod_z, work) / abs(lam_r);
            const BigFloat noise =
                unit * BigFloat(16.0 * (t.degree() + 4), work) * (horner_scale + abs(L));

            AsymptoticRow row;
            row.r = r;
            row.error = e.to_double();
            const double l2 = e.log2_abs();
            row.log10_error = l2 * std::log10(2.0);
            row.noise_limited = e <= noise;
            limited = limited || row.noise_limited;
            log2_err.push_back(l2);
            if (r >= scan.window) {
                const double prev = log2_err[static_cast<std::size_t>(r - scan.window)];
                row.decay_rate = std::exp2((l2 - prev) / static_cast<double>(scan.window));
            }
            scan.rows.push_back(row);
        }
        scan.limit = L.to_std();
        scan.working_bits = work;
        if (!limited || work >= kMaxBits) break;
        work *= 2;
    }
    return scan;
}

double star_radius(const Params& p) {
    const double m = p.m;
    return (m + 1.0) / m * std::pow(m * p.c.get_d(), 1.0 / (m + 1.0));
}

std::vector<BranchPoint> branch_points(const Params& p) {
    constexpr Bits bits = 128;
    const long n = p.m + 1;
    // Critical-point system: z = c (m+1) mu^m and c m mu^{m+1} = 1 give
    // z^{m+1} = c (m+1)^{m+1} / m^m.
    mpz_class top, bottom;
    mpz_ui_pow_ui(top.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    mpz_ui_pow_ui(bottom.get_mpz_t(), static_cast<unsigned long>(p.m), static_cast<unsigned long>(p.m));
    const Rational rhs = p.c * Rational(top, bottom);
    const auto roots = nth_roots(BigComplex(rhs, bits), n);

    const BigComplex one(std::complex<double>(1.0, 0.0), bits);
    const BigComplex c(p.c, bits);
    const BigComplex mm(Rational(p.m), bits);
    const BigComplex nn(Rational(n), bits);
    std::vector<BranchPoint> out;
    for (const auto& z : roots) {
        BranchPoint bp;
        bp.z = z.to_std();
        const BigComplex zd(bp.z, bits);
        bp.discriminant_residual = abs(one - pow(zd, n) / BigComplex(rhs, bits)).to_double();
        const BigComplex mu = nn / (mm * zd);
        const BigComplex P = c * pow(mu, n) - zd * mu + one;
        const BigComplex dP = nn * c * pow(mu, p.m) - zd;
        bp.critical_residual = std::max(abs(P).to_double(), abs(dP).to_double() / abs(zd).to_double());
        out.push_back(bp);
    }
    return out;
}

StarGeometry make_star_geometry(const Params& p) {
    StarGeometry g;
    g.m = p.m;
    g.c = p.c.get_d();
    g.a = star_radius(p);
    const double n = p.m + 1;
    for (int k = 0; k <= p.m; ++k) {
        g.rays_s0.push_back(2.0 * std::numbers::pi * k / n);
        g.rays_odd.push_back(2.0 * std::numbers::pi * k / n);
        g.rays_even.push_back((2.0 * k + 1.0) * std::numbers::pi / n);
    }
    return g;
}

double distance_to_segment(std::complex<double> z, std::complex<double> end) {
    const double len2 = std::norm(end);
    if (len2 == 0.0) return std::abs(z);
    const double t = std::clamp((z * std::conj(end)).real() / len2, 0.0, 1.0);
    return std::abs(z - t * end);
}

double distance_to_ray(std::complex<double> z, double angle) {
    const std::complex<double> u = std::polar(1.0, angle);
    const std::complex<double> w = z * std::conj(u);
    return w.real() <= 0.0 ? std::abs(z) : std::abs(w.imag());
}

double distance_to_rays(std::complex<double> z, const std::vector<double>& angles) {
    double best = std::numeric_limits<double>::infinity();
    for (double a : angles) best = std::min(best, distance_to_ray(z, a));
    return best;
}

double distance_to_s0(std::complex<double> z, const StarGeometry& g) {
    double best = std::numeric_limits<double>::infinity();
    for (double angle : g.rays_s0) best = std::min(best, distance_to_segment(z, std::polar(g.a, angle)));
    return best;
}

bool RegionMembership::in_d() const {
    return std::any_of(in_omega.begin(), in_omega.end(), [](bool b) { return b; });
}

RegionMembership region_classify(const Params& p, std::complex<double> z, double tol) {
    if (!(tol > 0.0)) throw InvalidInput("region_classify needs tol > 0");
    const StarGeometry g = make_star_geometry(p);
    RegionMembership out;
    out.dist_s0 = distance_to_s0(z, g);
    out.dist_even = distance_to_rays(z, g.rays_even);
    out.dist_odd = distance_to_rays(z, g.rays_odd);
    out.dist_branch_points = std::numeric_limits<double>::infinity();
    for (const auto& bp : branch_points(p)) {
        out.dist_branch_points = std::min(out.dist_branch_points, std::abs(z - bp.z));
    }
    out.on_s0 = out.dist_s0 < tol;
    out.on_even = out.dist_even < tol;
    out.on_odd = out.dist_odd < tol;
    out.on_s_m = p.m % 2 == 0 ? out.on_even : out.on_odd;
    out.in_omega.resize(static_cast<std::size_t>(p.m) + 1);
    out.in_omega[0] = !out.on_s0;
    for (int j = 1; j < p.m; ++j) out.in_omega[static_cast<std::size_t>(j)] = !(out.on_even || out.on_odd);
    out.in_omega[static_cast<std::size_t>(p.m)] = !out.on_s_m;
    return out;
}

std::vector<std::complex<double>> sample_points(const Params& p, std::size_t count, std::uint64_t seed,
                                                double r_min, double r_max, double margin) {
    const StarGeometry g = make_star_geometry(p);
    const auto bps = branch_points(p);
    std::mt19937_64 gen(seed);
    std::vector<std::complex<double>> out;
    out.reserve(count);
    const double min_dist = margin * g.a;
    while (out.size() < count) {
        const double radius = g.a * (r_min + (r_max - r_min) * unit_uniform(gen));
        const double angle = 2.0 * std::numbers::pi * unit_uniform(gen);
        const std::complex<double> z = std::polar(radius, angle);
        if (distance_to_s0(z, g) < min_dist) continue;
        if (distance_to_rays(z, g.rays_even) < min_dist) continue;
        if (distance_to_rays(z, g.rays_odd) < min_dist) continue;
        bool near_bp = false;
        for (const auto& bp : bps) near_bp = near_bp || std::abs(z - bp.z) < min_dist;
        if (near_bp) continue;
        out.push_back(z);
    }
    return out;
}

} // namespace chebsys
