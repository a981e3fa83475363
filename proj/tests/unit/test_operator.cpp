#include <doctest.h>

#include <random>

#include "chebsys/banded_operator.hpp"
#include "chebsys/errors.hpp"
#include "../support/oracles.hpp"

using namespace chebsys;

namespace {

RationalVector vec(int N, std::initializer_list<std::pair<int, Rational>> entries) {
    RationalVector v(static_cast<std::size_t>(N));
    for (const auto& [i, a] : entries) v[static_cast<std::size_t>(i)] = a;
    return v;
}

// Dense matrix-vector product built from entry(i, j), independent of apply().
RationalVector dense_apply(const BandedOperator& op, const RationalVector& v, bool transpose) {
    RationalVector out(v.size());
    for (int i = 0; i < op.size(); ++i) {
        for (int j = 0; j < op.size(); ++j) {
            const Rational a = transpose ? op.entry(j, i) : op.entry(i, j);
            out[static_cast<std::size_t>(i)] += a * v[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

} // namespace

TEST_CASE("apply T on unit vectors") {
    const Rational c(3, 2);
    const BandedOperator op(10, Params::make(2, c));
    const auto a = op.apply(unit_vector(10, 1));
    CHECK(a.v == vec(10, {{0, 1}, {3, c}}));
    CHECK_FALSE(a.overflow);
    CHECK(op.apply(unit_vector(10, 0)).v == vec(10, {{2, c}}));
    CHECK(op.apply(RationalVector(10)).v == RationalVector(10));
}

TEST_CASE("apply T transpose on unit vectors") {
    const Rational c(1, 3);
    const int m = 2, N = 9;
    const BandedOperator op(N, Params::make(m, c));
    CHECK(op.apply_transpose(unit_vector(N, 0)).v == unit_vector(N, 1));
    CHECK(op.apply_transpose(unit_vector(N, m)).v == vec(N, {{m + 1, 1}, {0, c}}));
    const auto edge = op.apply_transpose(unit_vector(N, N - 1));
    CHECK(edge.v == vec(N, {{N - 1 - m, c}}));
    CHECK(edge.overflow);
}

TEST_CASE("apply agrees with the dense matrix") {
    std::mt19937_64 gen(5);
    const BandedOperator op(12, Params::make(3, Rational(5, 2)));
    for (int t = 0; t < 10; ++t) {
        RationalVector v(12);
        for (auto& x : v) x = oracle::random_rational(gen);
        // Both drop contributions that leave the window.
        const auto a = op.apply(v);
        const auto b = op.apply_transpose(v);
        const auto da = dense_apply(op, v, false);
        const auto db = dense_apply(op, v, true);
        CHECK(a.v == da);
        CHECK(b.v == db);
    }
}

TEST_CASE("transpose property (Tv).w = v.(T^T w)") {
    std::mt19937_64 gen(99);
    for (int m = 1; m <= 4; ++m) {
        const BandedOperator op(15, Params::make(m, Rational(7, 3)));
        for (int t = 0; t < 25; ++t) {
            RationalVector v(15), w(15);
            for (auto& x : v) x = oracle::random_rational(gen);
            for (auto& x : w) x = oracle::random_rational(gen);
            CHECK(dot(op.apply(v).v, w) == dot(v, op.apply_transpose(w).v));
        }
    }
}

TEST_CASE("polynomial of the operator") {
    const Params p = Params::make(2, 1);
    const BandedOperator op(8, p);
    CHECK(op.apply_poly(Poly{0, 1}, true, unit_vector(8, 0)).v == unit_vector(8, 1));
    const RationalVector v = vec(8, {{2, Rational(1, 2)}, {5, -3}});
    CHECK(op.apply_poly(Poly{1}, false, v).v == v);
    const auto T3 = gen_type2(p, 3)[3];
    CHECK(op.apply_poly(T3, true, unit_vector(8, 0)).v == unit_vector(8, 3));
}

TEST_CASE("jump identities") {
    for (int m = 1; m <= 4; ++m) {
        CHECK(jump_check_type2(Params::make(m, Rational(2, 5)), 0));
        for (int r = 0; r < m; ++r) CHECK(jump_check_type1(Params::make(m, 3), r));
    }
    CHECK(jump_check_type2(Params::make(2, 1), 7));
    CHECK(jump_check_type2(Params::make(3, Rational(1, 2)), 10));
    CHECK(jump_check_type1(Params::make(2, 1), 9));
    CHECK(jump_check_type1(Params::make(2, Rational(3, 2)), 12));
}

TEST_CASE("biorthogonality entries") {
    CHECK(biorthogonality(Params::make(2, 1), 5, 5) == 1);
    CHECK(biorthogonality(Params::make(2, 1), 4, 7) == 0);
    for (int m = 1; m <= 3; ++m) CHECK(biorthogonality(Params::make(m, Rational(5, 7)), 0, 0) == 1);
}

TEST_CASE("Gram matrix is the identity") {
    const auto rep = gram_matrix(Params::make(3, Rational(3, 2)), 25, 25);
    CHECK(rep.is_identity());
    CHECK_FALSE(rep.overflow);
    const auto rect = gram_matrix(Params::make(2, 3), 10, 20);
    CHECK(rect.gram.size() == 11);
    CHECK(rect.gram[0].size() == 21);
    CHECK(rect.is_identity());
}

TEST_CASE("a too small truncation is detected") {
    // With N = 3 the type I images leave the window; the pairing is not trusted.
    CHECK_THROWS_AS(BandedOperator(0, Params::make(1, 1)), InvalidInput);
    const auto rep = gram_matrix(Params::make(2, 1), 6, 6, 5);
    CHECK(rep.overflow);
}
