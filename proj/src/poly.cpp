#include "chebsys/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "chebsys/errors.hpp"

namespace chebsys {

Rational parse_rational(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);

    auto valid_int = [](const std::string& part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
        if (i == part.size()) return false;
        return std::all_of(part.begin() + static_cast<long>(i), part.end(),
                           [](unsigned char ch) { return std::isdigit(ch) != 0; });
    };
    if (!valid_int(num, true) || !valid_int(den, false)) {
        throw InvalidInput("malformed rational '" + s + "', expected p or p/q");
    }
    mpz_class p(num[0] == '+' ? num.substr(1) : num, 10);
    mpz_class q(den, 10);
    if (q == 0) throw InvalidInput("zero denominator in '" + s + "'");
    Rational out(p, q);
    out.canonicalize();
    return out;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& value) { return Poly({value}); }

Poly Poly::monomial(const Rational& value, int power) {
    std::vector<Rational> c(static_cast<std::size_t>(power) + 1);
    c.back() = value;
    return Poly(std::move(c));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const {
    static const Rational zero(0);
    return coeffs_.empty() ? zero : coeffs_.back();
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= s;
    return *this;
}

std::string Poly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational a = coeffs_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        const bool negative = a < 0;
        if (negative) a = -a;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool unit = a == 1;
        if (!unit || i == 0) {
            if (a.get_den() != 1 && i > 0) {
                os << '(' << chebsys::to_string(a) << ')';
            } else {
                os << chebsys::to_string(a);
            }
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }

Poly operator-(const Poly& a) { return Rational(-1) * a; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            out[i + j] += a.coeffs()[i] * b.coeffs()[j];
        }
    }
    return Poly(std::move(out));
}

Poly operator*(const Rational& s, Poly a) { return a *= s; }

Poly shift_up(const Poly& p, int power) {
    if (p.is_zero() || power == 0) return p;
    std::vector<Rational> c(static_cast<std::size_t>(power));
    c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
    return Poly(std::move(c));
}

Rational eval(const Poly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

BigComplex eval(const Poly& p, const BigComplex& z, Bits bits) {
    const Bits work = bits + 32;
    const BigComplex zz = z.with_precision(work);
    BigComplex acc(work);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * zz;
        acc.re += BigFloat(*it, work);
    }
    return acc.with_precision(bits);
}

std::complex<double> eval(const Poly& p, std::complex<double> z, Bits bits) {
    return eval(p, BigComplex(z, std::max(bits, kDoubleBits)), std::max(bits, kDoubleBits)).to_std();
}

BigFloat abs_eval(const Poly& p, const BigFloat& r, Bits bits) {
    const BigFloat rr = abs(r).with_precision(bits);
    BigFloat acc(bits);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * rr + abs(BigFloat(*it, bits));
    }
    return acc;
}

Poly compose_star(const Poly& h, int m, int k, int ell) {
    if (h.is_zero()) return {};
    const int stride = m + 1;
    std::vector<Rational> c(static_cast<std::size_t>(ell + stride * h.degree()) + 1);
    const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    for (int i = 0; i <= h.degree(); ++i) {
        c[static_cast<std::size_t>(ell + stride * i)] = sign * h.coeffs()[static_cast<std::size_t>(i)];
    }
    return Poly(std::move(c));
}

} // namespace chebsys
