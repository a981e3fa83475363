#pragma once

// Variable-precision real and complex scalars over MPFR. Every value owns its
// precision; binary operations produce a result at the larger operand
// precision, so there is no process-wide precision state.

#include <complex>
#include <algorithm>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

namespace chebsys {

/// Precision in bits; 53 matches IEEE double.
using Bits = long;

inline constexpr Bits kDoubleBits = 53;

class BigFloat {
public:
    explicit BigFloat(Bits bits = kDoubleBits);
    explicit BigFloat(double value, Bits bits);
    explicit BigFloat(const mpq_class& value, Bits bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    Bits precision() const { return static_cast<Bits>(mpfr_get_prec(v_)); }
    /// Copy of this value rounded to `bits`.
    BigFloat with_precision(Bits bits) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// log2|x| without overflow; -inf for zero.
    double log2_abs() const;
    /// Decimal scientific notation with `digits` significant digits.
    std::string to_string(int digits = 17) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);

    static BigFloat pi(Bits bits);

private:
    mpfr_t v_;
};

BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a);

bool operator<(const BigFloat& a, const BigFloat& b);
bool operator>(const BigFloat& a, const BigFloat& b);
bool operator<=(const BigFloat& a, const BigFloat& b);
bool operator>=(const BigFloat& a, const BigFloat& b);
bool operator==(const BigFloat& a, const BigFloat& b);

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
/// x * 2^e, exact.
BigFloat ldexp(const BigFloat& x, long e);

struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(Bits bits = kDoubleBits) : re(bits), im(bits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(std::complex<double> z, Bits bits) : re(z.real(), bits), im(z.imag(), bits) {}
    explicit BigComplex(const mpq_class& q, Bits bits) : re(q, bits), im(0.0, bits) {}

    Bits precision() const { return std::max(re.precision(), im.precision()); }
    BigComplex with_precision(Bits bits) const {
        return {re.with_precision(bits), im.with_precision(bits)};
    }
    std::complex<double> to_std() const { return {re.to_double(), im.to_double()}; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigFloat& s, const BigComplex& a);
BigComplex operator-(const BigComplex& a);

BigFloat abs(const BigComplex& z);
BigFloat norm(const BigComplex& z);
BigFloat arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);
BigComplex polar(const BigFloat& rho, const BigFloat& theta);
/// z^n through the log-polar form |z|^n e^{i n arg z}; 0^n = 0 for n > 0.
BigComplex pow(const BigComplex& z, long n);
/// The `count` values w with w^count = z, principal one first, ordered by
/// increasing argument offset 2 pi k / count.
std::vector<BigComplex> nth_roots(const BigComplex& z, long count);

} // namespace chebsys
