#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "chebsys/bigfloat.hpp"

namespace chebsys {

/// Exact rational scalar; GMP keeps it canonical (lowest terms, den > 0).
using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q" into a canonical rational.
/// Throws InvalidInput on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Lossless "p/q" (or "p" when q = 1) rendering.
std::string to_string(const Rational& q);

/// Dense univariate polynomial over the rationals. coeffs()[i] multiplies
/// x^i; the coefficient vector never carries trailing zeros, so the zero
/// polynomial has an empty vector and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly constant(const Rational& value);
    /// value * x^power
    static Poly monomial(const Rational& value, int power);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of x^i; zero outside the stored range.
    Rational coeff(int i) const;
    const Rational& leading() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// Human-readable form, highest power first, e.g. "x^3 + 1".
    std::string to_string(char var = 'x') const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& s, Poly a);
/// Multiplication by x^power.
Poly shift_up(const Poly& p, int power);

/// Exact Horner evaluation.
Rational eval(const Poly& p, const Rational& x);

/// Horner evaluation at a complex point with coefficients rounded to `bits`.
/// The accumulation carries 32 guard bits and the result is rounded back to
/// `bits`.
BigComplex eval(const Poly& p, const BigComplex& z, Bits bits);
std::complex<double> eval(const Poly& p, std::complex<double> z, Bits bits = kDoubleBits);

/// Sum over i of |a_i| |z|^i, the scale that bounds Horner rounding error.
BigFloat abs_eval(const Poly& p, const BigFloat& r, Bits bits);

/// (-1)^k z^ell h(z^{m+1}).
Poly compose_star(const Poly& h, int m, int k, int ell);

} // namespace chebsys
