#pragma once

// The algebraic function lambda(z) defined by c lambda^{m+1} - z lambda + 1 = 0,
// its modulus-ordered branches, the branch-sum representation of t_r and the
// large-r limit of t_r / lambda_m^r.

#include <complex>
#include <cstdint>
#include <vector>

#include "chebsys/bigfloat.hpp"
#include "chebsys/recurrence.hpp"

namespace chebsys {

/// Consecutive branch moduli closer than this (relative) raise tieFlag.
inline constexpr double kTieTolerance = 1e-10;

struct BranchSet {
    BigComplex z;
    std::vector<BigComplex> lambdas;  ///< ascending modulus
    std::vector<double> residuals;    ///< |c lambda^{m+1} - z lambda + 1|
    bool tie = false;
    Bits precision = kDoubleBits;

    std::vector<double> moduli() const;
};

/// Residual tolerance 10^{2 - 0.3 bits} used to accept a solved branch set.
double branch_tolerance(Bits bits);

/// Solves for all m+1 branches at z. Roots are computed at 2*bits + 32 so
/// that double roots at branch points still come out accurate to `bits`.
/// Throws SolverDivergence when a residual stays above tolerance.
BranchSet solve_branches(const Params& p, const BigComplex& z, Bits bits);
BranchSet solve_branches(const Params& p, std::complex<double> z, Bits bits = kDoubleBits);

struct BranchCoefficients {
    std::vector<BigComplex> b;
    /// max_j |c lambda_j prod_{k != j}(lambda_j - lambda_k) - (c m lambda_j^{m+1} - 1)|
    /// relative to |c m lambda_j^{m+1} - 1|.
    double identity_rel_error = 0.0;
    bool identity_ok = false;
};

/// b_j = 1 / prod_{k != j}(lambda_j - lambda_k), the solution of the
/// Vandermonde system fixed by t_{-m..-1} = 0 and t_0 = 1.
/// Throws DegenerateBranches when the branch set carries a tie.
BranchCoefficients coefficients_b(const BranchSet& bs, const Params& p);

/// sum_j b_j lambda_j^{r+m}; valid for r >= -m.
BigComplex explicit_t(const Params& p, long r, const BigComplex& z, Bits bits);
std::complex<double> explicit_t(const Params& p, long r, std::complex<double> z, Bits bits = kDoubleBits);
/// Same sum from an already solved branch set.
BigComplex explicit_t(const BranchSet& bs, const BranchCoefficients& coeffs, const Params& p, long r);

/// A point within 1e-9 max(1, |z|) of S_m whose two largest branch moduli
/// differ by less than this (relative) lies on the cut of lambda_m.
inline constexpr double kDominantTieTolerance = 1e-6;

/// c / (c m - lambda_m^{-(m+1)}), the limit of t_r / lambda_m^r.
/// Throws OnStarSet when |lambda_{m-1}| and |lambda_m| coincide at z.
BigComplex limit_L(const Params& p, const BigComplex& z, Bits bits);
std::complex<double> limit_L(const Params& p, std::complex<double> z, Bits bits = kDoubleBits);

struct AsymptoticRow {
    long r = 0;
    double error = 0.0;       ///< e_r = |t_r / lambda_m^r - L|
    double log10_error = 0.0;
    double decay_rate = 0.0;  ///< (e_r / e_{r-w})^{1/w}; 0 for r < w
    bool noise_limited = false;
};

struct AsymptoticScan {
    std::complex<double> z;
    std::complex<double> limit;
    double branch_ratio = 0.0;  ///< |lambda_{m-1} / lambda_m|
    long window = 1;            ///< m (m+1)
    Bits working_bits = 0;
    std::vector<AsymptoticRow> rows;
    /// Decay estimate at the last row that is not noise limited.
    double final_decay_rate() const;
};

/// e_r for r = 0..rMax from the exact recurrence polynomials. The working
/// precision is raised above `bits` until no row is dominated by rounding.
AsymptoticScan asymptotic_scan(const Params& p, std::complex<double> z, long r_max, Bits bits);

/// ((m+1)/m) (m c)^{1/(m+1)}.
double star_radius(const Params& p);

struct BranchPoint {
    std::complex<double> z;
    /// |1 - m^m z^{m+1} / ((m+1)^{m+1} c)|, the normalized discriminant of
    /// c lambda^{m+1} - z lambda + 1 at z.
    double discriminant_residual = 0.0;
    /// max(|P_z(mu)|, |P_z'(mu)|) at the double root mu = (m+1) / (m z).
    double critical_residual = 0.0;
};

/// Solutions of {P_z = 0, P_z' = 0}: z^{m+1} = c (m+1)^{m+1} / m^m.
std::vector<BranchPoint> branch_points(const Params& p);

struct StarGeometry {
    int m = 1;
    double c = 1.0;
    double a = 2.0;
    std::vector<double> rays_s0;    ///< 2 pi k / (m+1); segments [0, a e^{i angle}]
    std::vector<double> rays_even;  ///< (2k+1) pi / (m+1)
    std::vector<double> rays_odd;   ///< 2 pi k / (m+1)
    /// Rays of S_m: even star for even m, odd star for odd m.
    const std::vector<double>& rays_m() const { return m % 2 == 0 ? rays_even : rays_odd; }
};

StarGeometry make_star_geometry(const Params& p);

double distance_to_segment(std::complex<double> z, std::complex<double> end);
double distance_to_ray(std::complex<double> z, double angle);
double distance_to_rays(std::complex<double> z, const std::vector<double>& angles);
double distance_to_s0(std::complex<double> z, const StarGeometry& g);

struct RegionMembership {
    double dist_s0 = 0.0;
    double dist_even = 0.0;
    double dist_odd = 0.0;
    double dist_branch_points = 0.0;
    bool on_s0 = false;
    bool on_even = false;
    bool on_odd = false;
    bool on_s_m = false;
    /// in_omega[j] for j = 0..m.
    std::vector<bool> in_omega;
    bool in_d() const;
};

RegionMembership region_classify(const Params& p, std::complex<double> z, double tol);

/// Deterministic points in the annulus r_min <= |z| <= r_max (in units of
/// star_radius) whose distance to S_0, both infinite stars and every branch
/// point is at least margin * star_radius.
std::vector<std::complex<double>> sample_points(const Params& p, std::size_t count, std::uint64_t seed,
                                                double r_min = 0.2, double r_max = 3.0, double margin = 0.05);

} // namespace chebsys
