#pragma once

// Zeros of t_r through the reduction t_r(z) = (-1)^k z^ell h_r(z^{m+1}): the
// roots of h_r are found first and every one of them contributes m+1 z-plane
// roots, plus ell roots at the origin.

#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "chebsys/algebraic.hpp"
#include "chebsys/bigfloat.hpp"
#include "chebsys/recurrence.hpp"

namespace chebsys {

struct HRootResult {
    std::vector<BigComplex> roots;
    Bits working_bits = 0;
    /// Largest change of any root between the last two precision levels,
    /// relative to max(1, |root|).
    double accuracy = 0.0;
};

/// Roots of h with its exact coefficients rounded at increasing precision
/// until two consecutive levels agree to `bits`.
/// Throws ConvergenceFailure (carrying h) if the iteration never settles.
HRootResult solve_h_roots(const Poly& h, Bits bits);
std::vector<BigComplex> roots_of_h(const Poly& h, Bits bits);

/// Groups roots closer than 1e-7 * max(1, max |root|); returns the group
/// size for every root.
std::vector<int> cluster_multiplicities(const std::vector<BigComplex>& roots);

/// Distance from z to S_m (the even star for even m, the odd star for odd m).
double distance_to_star(std::complex<double> z, const StarGeometry& g);

struct TRoot {
    BigComplex z;
    std::complex<double> value;
    double star_distance = 0.0;
    double residual = 0.0;  ///< |t_r(z)| / max_i |coef_i|
    int multiplicity = 1;
};

struct RootReport {
    long r = 0;
    IndexDecomposition index;
    std::vector<BigComplex> h_roots;
    std::vector<int> h_multiplicity;
    std::vector<TRoot> t_roots;  ///< with multiplicity, origin included
    double max_imag_h = 0.0;
    double max_rel_imag_h = 0.0;  ///< max |Im y| / |y|
    double min_separation_h = std::numeric_limits<double>::infinity();
    double max_star_distance = 0.0;
    double mean_star_distance = 0.0;  ///< over nonzero roots
    long origin_multiplicity = 0;
    double max_residual = 0.0;
    double h_accuracy = 0.0;
};

/// Throws InvalidInput if t_r is the zero polynomial.
RootReport roots_of_t(const TypeIRecord& rec, const Params& p, Bits bits);

/// Largest distance from w * e^{2 pi i/(m+1)} to the nearest root, over all
/// nonzero roots w, relative to max(1, |w|).
double orbit_pairing_error(const std::vector<TRoot>& roots, int m);

struct AttractionRow {
    long r = 0;
    std::size_t root_count = 0;
    double max_star_distance = 0.0;
    double mean_star_distance = 0.0;
    bool vacuous = false;
};

struct AttractionTable {
    std::vector<AttractionRow> rows;
    std::string mean_trend;  ///< "non-increasing", "increasing", "mixed" or "vacuous"
    std::string max_trend;
};

/// Trend label of a sequence; differences below 1e-12 (1 + |prev|) count as equal.
std::string trend_of(const std::vector<double>& values);

AttractionTable attraction_study(const Params& p, const std::vector<long>& r_list, Bits bits);

struct ConjectureRow {
    long r = 0;
    long degree_h = 0;
    double max_rel_imag = 0.0;
    double min_separation = std::numeric_limits<double>::infinity();
    double accuracy = 0.0;
    bool clustered = false;
    bool escalated = false;
};

struct ConjectureReport {
    std::string classification;  ///< PASS, INCONCLUSIVE or COUNTEREXAMPLE
    long offending_r = -1;
    double max_rel_imag = 0.0;
    double min_separation = std::numeric_limits<double>::infinity();
    std::vector<ConjectureRow> rows;
};

/// Probes whether every h_r, r <= rMax, has real simple roots. Never throws
/// on a negative finding; the classification carries the evidence.
ConjectureReport conjecture_probe(const Params& p, long r_max, Bits bits);

} // namespace chebsys
