#include <doctest.h>

#include <cmath>

#include "chebsys/bigfloat.hpp"

using namespace chebsys;

TEST_CASE("binary operations keep the larger precision") {
    const BigFloat a(1.0, 64);
    const BigFloat b(3.0, 256);
    CHECK((a / b).precision() == 256);
    CHECK((a + a).precision() == 64);
}

TEST_CASE("sqrt(2) to 200 bits") {
    const BigFloat two(2.0, 200);
    const BigFloat s = sqrt(two);
    // s^2 - 2 vanishes to the working precision.
    CHECK(std::fabs((s * s - two).to_double()) < std::ldexp(1.0, -195));
    CHECK(s.to_string(20).rfind("1.414213562373095048", 0) == 0);
}

TEST_CASE("rational conversion is correctly rounded") {
    const BigFloat third(mpq_class(1, 3), 53);
    CHECK(third.to_double() == 1.0 / 3.0);
}

TEST_CASE("pow agrees with repeated multiplication") {
    const BigComplex z(std::complex<double>(0.7, -1.3), 192);
    BigComplex acc(mpq_class(1), 192);
    for (int i = 0; i < 25; ++i) acc *= z;
    const BigComplex p = pow(z, 25);
    CHECK((abs(p - acc) / abs(acc)).to_double() < 1e-50);
    CHECK(abs(pow(z, 0) - BigComplex(mpq_class(1), 192)).to_double() < 1e-50);
    CHECK((abs(pow(z, -3) * pow(z, 3) - BigComplex(mpq_class(1), 192))).to_double() < 1e-50);
}

TEST_CASE("nth roots: principal first, all satisfy w^n = z") {
    const BigComplex z(std::complex<double>(-8.0, 0.0), 128);
    const auto ws = nth_roots(z, 3);
    REQUIRE(ws.size() == 3);
    const auto w0 = ws[0].to_std();
    CHECK(w0.real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(w0.imag() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    for (const auto& w : ws) CHECK((abs(pow(w, 3) - z)).to_double() < 1e-30);
}

TEST_CASE("exp and log are inverse") {
    const BigComplex z(std::complex<double>(0.3, 2.1), 160);
    CHECK(abs(exp(log(z)) - z).to_double() < 1e-40);
}
