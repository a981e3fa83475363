#include "chebsys/polyroots.hpp"

#include <cmath>
#include <limits>

namespace chebsys {

namespace {

constexpr double kTwoPi = 6.283185307179586;

BigFloat exp2_double(double log2_value, Bits bits) {
    const double whole = std::floor(log2_value);
    return ldexp(BigFloat(std::exp2(log2_value - whole), bits), static_cast<long>(whole));
}

// Starting points from the upper convex hull of (i, log2|a_i|): each hull
// edge i -> j contributes j - i points on a circle whose radius matches the
// slope of the edge.
std::vector<BigComplex> newton_polygon_start(const std::vector<BigComplex>& a, Bits bits) {
    const std::size_t n = a.size() - 1;
    std::vector<double> lg(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) lg[i] = abs(a[i]).log2_abs();

    std::vector<std::size_t> hull;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!std::isfinite(lg[i])) continue;
        while (hull.size() >= 2) {
            const std::size_t p = hull[hull.size() - 2];
            const std::size_t q = hull.back();
            const double cross = (static_cast<double>(q) - static_cast<double>(p)) * (lg[i] - lg[p]) -
                                 (lg[q] - lg[p]) * (static_cast<double>(i) - static_cast<double>(p));
            if (cross >= 0) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(i);
    }

    std::vector<BigComplex> out;
    out.reserve(n);
    for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
        const std::size_t i = hull[h];
        const std::size_t j = hull[h + 1];
        const std::size_t count = j - i;
        const double log_radius = (lg[i] - lg[j]) / static_cast<double>(count);
        const BigFloat radius = exp2_double(log_radius, bits);
        for (std::size_t k = 0; k < count; ++k) {
            const double angle = kTwoPi * static_cast<double>(k) / static_cast<double>(count) +
                                 kTwoPi * static_cast<double>(i) / static_cast<double>(n) + 0.7;
            out.push_back(polar(radius, BigFloat(angle, bits)));
        }
    }
    return out;
}

AberthResult iterate(const std::vector<BigComplex>& a, Bits bits, std::vector<BigComplex> z) {
    const std::size_t n = z.size();
    std::vector<BigComplex> coeffs;
    coeffs.reserve(a.size());
    for (const auto& c : a) coeffs.push_back(c.with_precision(bits));
    for (auto& zi : z) zi = zi.with_precision(bits);

    std::vector<BigFloat> abs_coeffs;
    for (const auto& c : coeffs) abs_coeffs.push_back(abs(c));
    const BigFloat eps = ldexp(BigFloat(1.0, bits), -(bits - 4));
    const BigFloat noise = ldexp(BigFloat(4.0 * static_cast<double>(n + 1), bits), -bits);
    const BigComplex one(std::complex<double>(1.0, 0.0), bits);

    std::vector<bool> done(n, false);
    AberthResult result;
    const int max_iterations = 200 + 20 * static_cast<int>(n);
    for (int it = 0; it < max_iterations; ++it) {
        result.iterations = it + 1;
        bool all = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            BigComplex p(bits), dp(bits);
            horner_with_derivative(coeffs, z[i], p, dp);
            if (p.is_zero()) {
                done[i] = true;
                continue;
            }
            BigFloat scale(bits);
            const BigFloat r = abs(z[i]);
            for (auto c = abs_coeffs.rbegin(); c != abs_coeffs.rend(); ++c) scale = scale * r + *c;
            if (abs(p) <= noise * scale) {
                done[i] = true;
                continue;
            }
            BigComplex sum(bits);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                const BigComplex diff = z[i] - z[j];
                if (!diff.is_zero()) sum += one / diff;
            }
            BigComplex step(bits);
            if (dp.is_zero()) {
                step = BigComplex(std::complex<double>(1e-3, 1e-3), bits) * (one + z[i]);
            } else {
                const BigComplex ratio = p / dp;
                step = ratio / (one - ratio * sum);
            }
            z[i] -= step;
            if (abs(step) <= eps * abs(z[i])) {
                done[i] = true;
            } else {
                all = false;
            }
        }
        if (all) {
            result.converged = true;
            break;
        }
    }
    result.roots = std::move(z);
    return result;
}

} // namespace

void horner_with_derivative(const std::vector<BigComplex>& coeffs, const BigComplex& z,
                            BigComplex& value, BigComplex& derivative) {
    const Bits bits = z.precision();
    value = BigComplex(bits);
    derivative = BigComplex(bits);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        derivative = derivative * z + value;
        value = value * z + *it;
    }
}

AberthResult aberth_roots(const std::vector<BigComplex>& coeffs, Bits bits, std::vector<BigComplex> initial) {
    // Exact zero roots are split off so the hull start never sees log2(0).
    std::size_t zeros = 0;
    while (zeros + 1 < coeffs.size() && coeffs[zeros].is_zero()) ++zeros;
    const std::vector<BigComplex> reduced(coeffs.begin() + static_cast<long>(zeros), coeffs.end());

    AberthResult result;
    if (reduced.size() <= 1) {
        result.converged = true;
    } else {
        std::vector<BigComplex> start;
        if (initial.size() == reduced.size() - 1) {
            start = std::move(initial);
            result = iterate(reduced, bits, std::move(start));
        } else {
            const Bits coarse = std::min<Bits>(bits, 96);
            result = iterate(reduced, coarse, newton_polygon_start(reduced, coarse));
            if (coarse < bits) {
                const int coarse_iterations = result.iterations;
                result = iterate(reduced, bits, std::move(result.roots));
                result.iterations += coarse_iterations;
            }
        }
    }
    for (std::size_t i = 0; i < zeros; ++i) result.roots.emplace_back(bits);
    return result;
}

} // namespace chebsys
