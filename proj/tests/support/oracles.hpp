#pragma once

// Reference computations used to check the library. They deliberately avoid
// the library's own types and algorithms.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>
#include <gmpxx.h>

namespace oracle {

/// Sparse coefficient map exponent -> value.
using SparsePoly = std::map<int, mpq_class>;

inline SparsePoly cleaned(SparsePoly p) {
    for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
    return p;
}

/// c t_r = x t_{r-m} - t_{r-m-1}, t_0 = 1, t_1..t_{m-1} = 0, negatives 0.
inline std::vector<SparsePoly> type1(int m, const mpq_class& c, int R) {
    std::vector<SparsePoly> t(static_cast<std::size_t>(R) + 1);
    const auto get = [&](int i) -> SparsePoly { return i < 0 ? SparsePoly{} : t[static_cast<std::size_t>(i)]; };
    for (int r = 0; r <= R; ++r) {
        if (r < m) {
            if (r == 0) t[0][0] = 1;
            continue;
        }
        SparsePoly next;
        for (const auto& [e, a] : get(r - m)) next[e + 1] += a / c;
        for (const auto& [e, a] : get(r - m - 1)) next[e] -= a / c;
        t[static_cast<std::size_t>(r)] = cleaned(next);
    }
    return t;
}

/// T_{n+1} = x T_n - c T_{n-m}.
inline std::vector<SparsePoly> type2(int m, const mpq_class& c, int N) {
    std::vector<SparsePoly> T(static_cast<std::size_t>(N) + 1);
    T[0][0] = 1;
    for (int n = 0; n < N; ++n) {
        SparsePoly next;
        for (const auto& [e, a] : T[static_cast<std::size_t>(n)]) next[e + 1] += a;
        if (n - m >= 0) {
            for (const auto& [e, a] : T[static_cast<std::size_t>(n - m)]) next[e] -= c * a;
        }
        T[static_cast<std::size_t>(n) + 1] = cleaned(next);
    }
    return T;
}

inline std::complex<long double> eval(const SparsePoly& p, std::complex<long double> z) {
    std::complex<long double> acc = 0;
    for (const auto& [e, a] : p) acc += static_cast<long double>(a.get_d()) * std::pow(z, e);
    return acc;
}

/// Second-kind Chebyshev U_n(u) by U_n = 2u U_{n-1} - U_{n-2}.
inline double chebyshev_u(int n, double u) {
    double prev = 1.0, cur = 2.0 * u;
    if (n == 0) return prev;
    for (int k = 2; k <= n; ++k) {
        const double next = 2.0 * u * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Roots of sum_i coeffs[i] x^i as companion-matrix eigenvalues.
inline std::vector<std::complex<double>> companion_roots(const std::vector<std::complex<double>>& coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -coeffs[static_cast<std::size_t>(i)] / coeffs.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(C);
    std::vector<std::complex<double>> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    return out;
}

/// Roots of c l^{m+1} - z l + 1, ascending modulus.
inline std::vector<std::complex<double>> branch_roots(int m, double c, std::complex<double> z) {
    std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(m) + 2, 0.0);
    coeffs[0] = 1.0;
    coeffs[1] = -z;
    coeffs.back() = c;
    auto roots = companion_roots(coeffs);
    std::sort(roots.begin(), roots.end(), [](auto a, auto b) { return std::abs(a) < std::abs(b); });
    return roots;
}

inline mpq_class random_rational(std::mt19937_64& gen, int span = 9, int max_den = 7) {
    std::uniform_int_distribution<int> num(-span, span), den(1, max_den);
    mpq_class q(num(gen), den(gen));
    q.canonicalize();
    return q;
}

} // namespace oracle
