#include <doctest.h>

#include <cmath>

#include "chebsys/errors.hpp"
#include "chebsys/roots.hpp"

using namespace chebsys;
using cd = std::complex<double>;

namespace {

TypeIRecord record(const Params& p, long r) {
    const auto recs = type1_records(p, r);
    return recs.back();
}

bool contains(const std::vector<TRoot>& roots, cd z, double tol) {
    for (const auto& root : roots) {
        if (std::abs(root.value - z) < tol) return true;
    }
    return false;
}

} // namespace

TEST_CASE("roots of h") {
    const auto one = roots_of_h(Poly{1, 1}, 128);
    REQUIRE(one.size() == 1);
    CHECK(std::abs(one[0].to_std() - cd(-1, 0)) < 1e-30);
    CHECK(roots_of_h(Poly{5}, 128).empty());
    auto two = roots_of_h(Poly{-1, 0, 1}, 128);
    REQUIRE(two.size() == 2);
    std::sort(two.begin(), two.end(), [](const auto& a, const auto& b) { return a.re < b.re; });
    CHECK(std::abs(two[0].to_std() - cd(-1, 0)) < 1e-30);
    CHECK(std::abs(two[1].to_std() - cd(1, 0)) < 1e-30);
    CHECK_THROWS_AS(roots_of_h(Poly{}, 128), InvalidInput);
}

TEST_CASE("multiple roots are clustered") {
    // (y - 2)^3 (y + 1)
    const Poly h = Poly{-2, 1} * Poly{-2, 1} * Poly{-2, 1} * Poly{1, 1};
    const auto roots = roots_of_h(h, 128);
    const auto mult = cluster_multiplicities(roots);
    REQUIRE(roots.size() == 4);
    int triple = 0, single = 0;
    for (int k : mult) (k == 3 ? triple : single) += 1;
    CHECK(triple == 3);
    CHECK(single == 1);
}

TEST_CASE("roots of t_r examples, m=2 c=1") {
    const Params p = Params::make(2, 1);
    const auto r5 = roots_of_t(record(p, 5), p, 128);
    REQUIRE(r5.t_roots.size() == 1);
    CHECK(r5.t_roots[0].z.is_zero());
    CHECK(r5.origin_multiplicity == 1);
    CHECK(r5.h_roots.empty());

    const auto r6 = roots_of_t(record(p, 6), p, 128);
    REQUIRE(r6.t_roots.size() == 3);
    for (const cd w : {cd(-1, 0), std::polar(1.0, M_PI / 3), std::polar(1.0, -M_PI / 3)}) {
        CHECK(contains(r6.t_roots, w, 1e-10));
    }
    for (const auto& root : r6.t_roots) {
        CHECK(root.star_distance < 1e-12);
        CHECK(root.residual < 1e-20);
    }

    const auto r0 = roots_of_t(record(p, 0), p, 128);
    CHECK(r0.t_roots.empty());
    CHECK_THROWS_AS(roots_of_t(record(p, 1), p, 128), InvalidInput);
}

TEST_CASE("distance to the star") {
    const StarGeometry g2 = make_star_geometry(Params::make(2, 1));
    CHECK(distance_to_star(std::polar(2.0, M_PI), g2) < 1e-15);
    CHECK(distance_to_star(cd(1, 0), g2) == doctest::Approx(std::sqrt(3.0) / 2));
    CHECK(distance_to_star(cd(0, 0), g2) == 0.0);
    const StarGeometry g1 = make_star_geometry(Params::make(1, 1));
    CHECK(distance_to_star(cd(-3, 0.5), g1) == doctest::Approx(0.5));
}

TEST_CASE("root count, residuals and orbit symmetry") {
    for (int m = 1; m <= 3; ++m) {
        const Params p = Params::make(m, Rational(1, 2));
        for (const auto& rec : type1_records(p, 70)) {
            if (rec.t.is_zero()) continue;
            const auto rep = roots_of_t(rec, p, 128);
            CHECK(static_cast<long>(rep.t_roots.size()) == rec.index.d - rec.index.k);
            CHECK(rep.max_residual <= 1e-8);
            CHECK(orbit_pairing_error(rep.t_roots, m) <= 1e-8);
        }
    }
}

TEST_CASE("real h roots put the t roots on a star") {
    for (int m = 1; m <= 3; ++m) {
        const Params p = Params::make(m, 1);
        const StarGeometry g = make_star_geometry(p);
        for (long r : {20L, 41L, 63L}) {
            const auto rep = roots_of_t(record(p, r), p, 128);
            for (const auto& root : rep.t_roots) {
                const double d = std::min(distance_to_rays(root.value, g.rays_even), distance_to_rays(root.value, g.rays_odd));
                CHECK(d < 1e-10);
            }
        }
    }
}

TEST_CASE("trend labels") {
    CHECK(trend_of({}) == "vacuous");
    CHECK(trend_of({3, 2, 2, 1}) == "non-increasing");
    CHECK(trend_of({1, 2}) == "increasing");
    CHECK(trend_of({1, 2, 1}) == "mixed");
}

TEST_CASE("attraction study") {
    const auto t = attraction_study(Params::make(2, 1), {30, 60, 90}, 128);
    REQUIRE(t.rows.size() == 3);
    CHECK(t.mean_trend == "non-increasing");
    CHECK(t.max_trend == "non-increasing");
    const auto v = attraction_study(Params::make(2, 1), {0}, 128);
    CHECK(v.rows[0].vacuous);
    CHECK(v.mean_trend == "vacuous");
    const auto m1 = attraction_study(Params::make(1, 1), {20, 40}, 128);
    for (const auto& row : m1.rows) CHECK(row.max_star_distance < 1e-10);
    CHECK_THROWS_AS(attraction_study(Params::make(1, 1), {40, 20}, 128), InvalidInput);
}

TEST_CASE("real-root probe") {
    CHECK(conjecture_probe(Params::make(1, 1), 40, 128).classification == "PASS");
    const auto rep = conjecture_probe(Params::make(2, 1), 60, 128);
    CHECK_FALSE(rep.classification.empty());
    CHECK_FALSE(rep.rows.empty());
    const auto trivial = conjecture_probe(Params::make(3, 1), 3, 128);
    CHECK(trivial.classification == "PASS");
    CHECK(trivial.rows.empty());
}
