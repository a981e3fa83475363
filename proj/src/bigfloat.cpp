#include "chebsys/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace chebsys {

namespace {

mpfr_prec_t clamp_prec(Bits bits) {
    return static_cast<mpfr_prec_t>(std::max<Bits>(bits, MPFR_PREC_MIN));
}

Bits join(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}

} // namespace

BigFloat::BigFloat(Bits bits) {
    mpfr_init2(v_, clamp_prec(bits));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double value, Bits bits) {
    mpfr_init2(v_, clamp_prec(bits));
    mpfr_set_d(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, Bits bits) {
    mpfr_init2(v_, clamp_prec(bits));
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(Bits bits) const {
    BigFloat out(bits);
    mpfr_set(out.v_, v_, MPFR_RNDN);
    return out;
}

double BigFloat::log2_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    long e = 0;
    const double mant = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log2(std::fabs(mant)) + static_cast<double>(e);
}

std::string BigFloat::to_string(int digits) const {
    if (is_zero()) return "0";
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return std::string(buf.data());
}

BigFloat& BigFloat::operator+=(const BigFloat& o) { return *this = *this + o; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { return *this = *this - o; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { return *this = *this * o; }
BigFloat& BigFloat::operator/=(const BigFloat& o) { return *this = *this / o; }

BigFloat BigFloat::pi(Bits bits) {
    BigFloat out(bits);
    mpfr_const_pi(out.v_, MPFR_RNDN);
    return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat out(join(a, b));
    mpfr_add(out.get(), a.get(), b.get(), MPFR_RNDN);
    return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat out(join(a, b));
    mpfr_sub(out.get(), a.get(), b.get(), MPFR_RNDN);
    return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat out(join(a, b));
    mpfr_mul(out.get(), a.get(), b.get(), MPFR_RNDN);
    return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat out(join(a, b));
    mpfr_div(out.get(), a.get(), b.get(), MPFR_RNDN);
    return out;
}

BigFloat operator-(const BigFloat& a) {
    BigFloat out(a.precision());
    mpfr_neg(out.get(), a.get(), MPFR_RNDN);
    return out;
}

bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

#define CHEBSYS_UNARY(name, fn)                         \
    BigFloat name(const BigFloat& x) {                  \
        BigFloat out(x.precision());                    \
        fn(out.get(), x.get(), MPFR_RNDN);              \
        return out;                                     \
    }

CHEBSYS_UNARY(abs, mpfr_abs)
CHEBSYS_UNARY(sqrt, mpfr_sqrt)
CHEBSYS_UNARY(exp, mpfr_exp)
CHEBSYS_UNARY(log, mpfr_log)
CHEBSYS_UNARY(sin, mpfr_sin)
CHEBSYS_UNARY(cos, mpfr_cos)

#undef CHEBSYS_UNARY

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat out(join(x, y));
    mpfr_atan2(out.get(), y.get(), x.get(), MPFR_RNDN);
    return out;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat out(join(x, y));
    mpfr_hypot(out.get(), x.get(), y.get(), MPFR_RNDN);
    return out;
}

BigFloat ldexp(const BigFloat& x, long e) {
    BigFloat out(x.precision());
    mpfr_mul_2si(out.get(), x.get(), e, MPFR_RNDN);
    return out;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) { return *this = *this + o; }
BigComplex& BigComplex::operator-=(const BigComplex& o) { return *this = *this - o; }
BigComplex& BigComplex::operator*=(const BigComplex& o) { return *this = *this * o; }

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    const BigFloat den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

BigComplex operator*(const BigFloat& s, const BigComplex& a) { return {s * a.re, s * a.im}; }
BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }

BigFloat abs(const BigComplex& z) { return hypot(z.re, z.im); }
BigFloat norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
BigFloat arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex exp(const BigComplex& z) { return polar(exp(z.re), z.im); }
BigComplex log(const BigComplex& z) { return {log(abs(z)), arg(z)}; }

BigComplex polar(const BigFloat& rho, const BigFloat& theta) {
    return {rho * cos(theta), rho * sin(theta)};
}

BigComplex pow(const BigComplex& z, long n) {
    const Bits bits = z.precision();
    if (n == 0) return BigComplex(std::complex<double>(1.0, 0.0), bits);
    if (z.is_zero()) return BigComplex(bits);
    // Carry enough guard bits that n * log|z| and n * arg z keep full
    // relative accuracy.
    const Bits guard = 16 + static_cast<Bits>(std::log2(static_cast<double>(std::labs(n)) + 1.0)) +
                       static_cast<Bits>(std::log2(std::fabs(abs(z).log2_abs()) + 2.0));
    const BigComplex w = z.with_precision(bits + guard);
    const BigFloat nn(static_cast<double>(n), bits + guard);
    const BigComplex out = polar(exp(nn * log(abs(w))), nn * arg(w));
    return out.with_precision(bits);
}

std::vector<BigComplex> nth_roots(const BigComplex& z, long count) {
    const Bits bits = z.precision();
    std::vector<BigComplex> out;
    out.reserve(static_cast<std::size_t>(count));
    const BigFloat n(static_cast<double>(count), bits);
    const BigFloat rho = z.is_zero() ? BigFloat(bits) : exp(log(abs(z)) / n);
    const BigFloat theta = z.is_zero() ? BigFloat(bits) : arg(z);
    const BigFloat two_pi = ldexp(BigFloat::pi(bits), 1);
    for (long k = 0; k < count; ++k) {
        const BigFloat kk(static_cast<double>(k), bits);
        out.push_back(polar(rho, (theta + kk * two_pi) / n));
    }
    return out;
}

} // namespace chebsys
