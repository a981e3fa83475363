#include "chebsys/banded_operator.hpp"

#include <algorithm>

#include "chebsys/errors.hpp"

namespace chebsys {

namespace {

struct Type1Images {
    std::vector<RationalVector> rows;
    bool overflow = false;
};

// t_r(T) . E for r = 0..R, built from the vector recurrence components.
Type1Images type1_images(const BandedOperator& op, long R) {
    const auto records = gen_type1_vectors(op.params(), R);
    Type1Images out;
    for (const auto& rec : records) {
        RationalVector acc(static_cast<std::size_t>(op.size()));
        for (int j = 0; j < op.params().m; ++j) {
            const Poly& comp = rec.components[static_cast<std::size_t>(j)];
            if (comp.is_zero()) continue;
            const Applied a = op.apply_poly(comp, false, unit_vector(op.size(), j));
            out.overflow = out.overflow || a.overflow;
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += a.v[i];
        }
        out.rows.push_back(std::move(acc));
    }
    return out;
}

} // namespace

RationalVector unit_vector(int N, int j) {
    RationalVector v(static_cast<std::size_t>(N));
    if (j >= 0 && j < N) v[static_cast<std::size_t>(j)] = 1;
    return v;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw InvalidInput("dot: length mismatch");
    Rational acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
    }
    return acc;
}

BandedOperator::BandedOperator(int N, Params params) : N_(N), params_(std::move(params)) {
    if (N < 1) throw InvalidInput("truncation size must be positive");
}

Rational BandedOperator::entry(int i, int j) const {
    if (j == i - params_.m) return params_.c;
    if (j == i + 1) return 1;
    return 0;
}

Applied BandedOperator::apply(const RationalVector& v) const {
    if (static_cast<int>(v.size()) != N_) throw InvalidInput("apply: vector length != N");
    Applied out{RationalVector(v.size()), false};
    const int m = params_.m;
    for (int j = 0; j < N_; ++j) {
        const Rational& x = v[static_cast<std::size_t>(j)];
        if (x == 0) continue;
        if (j >= 1) out.v[static_cast<std::size_t>(j - 1)] += x;
        if (j + m < N_) {
            out.v[static_cast<std::size_t>(j + m)] += params_.c * x;
        } else {
            out.overflow = true;
        }
    }
    return out;
}

Applied BandedOperator::apply_transpose(const RationalVector& v) const {
    if (static_cast<int>(v.size()) != N_) throw InvalidInput("apply_transpose: vector length != N");
    Applied out{RationalVector(v.size()), false};
    const int m = params_.m;
    for (int j = 0; j < N_; ++j) {
        const Rational& x = v[static_cast<std::size_t>(j)];
        if (x == 0) continue;
        if (j + 1 < N_) {
            out.v[static_cast<std::size_t>(j + 1)] += x;
        } else {
            out.overflow = true;
        }
        if (j >= m) out.v[static_cast<std::size_t>(j - m)] += params_.c * x;
    }
    return out;
}

Applied BandedOperator::apply_poly(const Poly& p, bool transpose, const RationalVector& v) const {
    Applied acc{RationalVector(v.size()), false};
    for (int i = p.degree(); i >= 0; --i) {
        if (i != p.degree()) {
            Applied next = transpose ? apply_transpose(acc.v) : apply(acc.v);
            next.overflow = next.overflow || acc.overflow;
            acc = std::move(next);
        }
        const Rational& a = p.coeffs()[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] != 0) acc.v[j] += a * v[j];
        }
    }
    return acc;
}

int default_truncation(const Params& p, long max_index) {
    return static_cast<int>(max_index) + p.m + 2;
}

bool jump_check_type2(const Params& p, long n) {
    const BandedOperator op(default_truncation(p, n), p);
    const auto T = gen_type2(p, n);
    const Applied a = op.apply_poly(T.back(), true, unit_vector(op.size(), 0));
    return !a.overflow && a.v == unit_vector(op.size(), static_cast<int>(n));
}

bool jump_check_type1(const Params& p, long r) {
    const BandedOperator op(default_truncation(p, r), p);
    const auto images = type1_images(op, r);
    return !images.overflow && images.rows.back() == unit_vector(op.size(), static_cast<int>(r));
}

Rational biorthogonality(const Params& p, long n, long r, int N) {
    const BandedOperator op(N > 0 ? N : default_truncation(p, std::max(n, r)), p);
    const auto images = type1_images(op, r);
    const auto T = gen_type2(p, n);
    const Applied right = op.apply_poly(T.back(), true, unit_vector(op.size(), 0));
    return dot(images.rows.back(), right.v);
}

bool GramReport::is_identity() const {
    for (std::size_t n = 0; n < gram.size(); ++n) {
        for (std::size_t r = 0; r < gram[n].size(); ++r) {
            if (gram[n][r] != (n == r ? 1 : 0)) return false;
        }
    }
    return true;
}

GramReport gram_matrix(const Params& p, long n_max, long r_max, int N) {
    GramReport report;
    report.n_max = n_max;
    report.r_max = r_max;
    report.N = N > 0 ? N : default_truncation(p, std::max(n_max, r_max));
    const BandedOperator op(report.N, p);
    const auto left = type1_images(op, r_max);
    const auto T = gen_type2(p, n_max);
    report.overflow = left.overflow;
    report.gram.resize(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        const Applied right = op.apply_poly(T[static_cast<std::size_t>(n)], true, unit_vector(op.size(), 0));
        report.overflow = report.overflow || right.overflow;
        auto& row = report.gram[static_cast<std::size_t>(n)];
        for (long r = 0; r <= r_max; ++r) row.push_back(dot(left.rows[static_cast<std::size_t>(r)], right.v));
    }
    return report;
}

} // namespace chebsys
