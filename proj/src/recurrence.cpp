#include "chebsys/recurrence.hpp"

#include <sstream>

#include "chebsys/errors.hpp"

namespace chebsys {

Params Params::make(int m, const Rational& c) {
    if (m < 1) throw InvalidInput("m must be >= 1, got " + std::to_string(m));
    if (c <= 0) throw InvalidInput("c must be > 0, got " + to_string(c));
    Params p;
    p.m = m;
    p.c = c;
    return p;
}

IndexDecomposition decompose_index(long r, int m) {
    if (r < 0 || m < 1) throw InvalidInput("decompose_index needs r >= 0 and m >= 1");
    IndexDecomposition out;
    out.d = r / m;
    out.k = r % m;
    const long diff = out.d - out.k;
    const long stride = m + 1;
    out.ell = ((diff % stride) + stride) % stride;
    out.tau = (diff - out.ell) / stride;
    return out;
}

TypeIGenerator::TypeIGenerator(Params params) : params_(std::move(params)), inv_c_(1 / params_.c) {}

void TypeIGenerator::extend_to(long R) {
    const long m = params_.m;
    const Poly x = Poly::monomial(1, 1);
    t_.reserve(static_cast<std::size_t>(R) + 1);
    for (long r = static_cast<long>(t_.size()); r <= R; ++r) {
        if (r < m) {
            t_.push_back(r == 0 ? Poly::constant(1) : Poly{});
            continue;
        }
        Poly next = shift_up(t_[static_cast<std::size_t>(r - m)], 1);
        if (r - m - 1 >= 0) next -= t_[static_cast<std::size_t>(r - m - 1)];
        next *= inv_c_;
        t_.push_back(std::move(next));
    }
}

const Poly& TypeIGenerator::at(long r) {
    extend_to(r);
    return t_[static_cast<std::size_t>(r)];
}

const std::vector<Poly>& TypeIGenerator::prefix(long R) {
    extend_to(R);
    return t_;
}

std::vector<TypeIVectorRecord> gen_type1_vectors(const Params& p, long R) {
    const auto m = static_cast<std::size_t>(p.m);
    const Rational inv_c = 1 / p.c;
    std::vector<TypeIVectorRecord> out;
    out.reserve(static_cast<std::size_t>(R) + 1);
    for (long r = 0; r <= R; ++r) {
        TypeIVectorRecord rec;
        rec.r = r;
        rec.components.resize(m);
        if (r < p.m) {
            rec.components[static_cast<std::size_t>(r)] = Poly::constant(1);
        } else {
            const auto& a = out[static_cast<std::size_t>(r - p.m)].components;
            for (std::size_t j = 0; j < m; ++j) {
                Poly next = shift_up(a[j], 1);
                if (r - p.m - 1 >= 0) next -= out[static_cast<std::size_t>(r - p.m - 1)].components[j];
                next *= inv_c;
                rec.components[j] = std::move(next);
            }
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<Poly> gen_type1_scalar(const Params& p, long R) {
    TypeIGenerator gen(p);
    return gen.prefix(R);
}

std::vector<Poly> gen_type2(const Params& p, long N) {
    const Poly x = Poly::monomial(1, 1);
    std::vector<Poly> T;
    T.reserve(static_cast<std::size_t>(N) + 1);
    T.push_back(Poly::constant(1));
    for (long n = 0; n < N; ++n) {
        Poly next = shift_up(T[static_cast<std::size_t>(n)], 1);
        if (n - p.m >= 0) next -= p.c * T[static_cast<std::size_t>(n - p.m)];
        T.push_back(std::move(next));
    }
    return T;
}

Poly extract_h(const Poly& t, long r, int m) {
    const IndexDecomposition idx = decompose_index(r, m);
    auto fail = [&](const std::string& why) {
        std::ostringstream os;
        os << "t_" << r << " (m=" << m << ") " << why << ": " << t.to_string();
        throw FactorizationViolation(os.str());
    };
    if (idx.tau < 0) {
        if (!t.is_zero()) fail("should vanish (tau = -1)");
        return {};
    }
    if (t.is_zero()) fail("vanishes although tau >= 0");
    const long stride = m + 1;
    for (int i = 0; i <= t.degree(); ++i) {
        if (t.coeffs()[static_cast<std::size_t>(i)] != 0 && (i - idx.ell) % stride != 0) {
            fail("has support outside residue class " + std::to_string(idx.ell) + " mod " +
                 std::to_string(stride));
        }
        if (t.coeffs()[static_cast<std::size_t>(i)] != 0 && i < idx.ell) {
            fail("has support below z^" + std::to_string(idx.ell));
        }
    }
    if ((t.degree() - idx.ell) % stride != 0) fail("degree outside residue class");
    const long deg_h = (t.degree() - idx.ell) / stride;
    const Rational sign = idx.k % 2 == 0 ? Rational(1) : Rational(-1);
    std::vector<Rational> h(static_cast<std::size_t>(deg_h) + 1);
    for (long i = 0; i <= deg_h; ++i) {
        h[static_cast<std::size_t>(i)] = sign * t.coeff(static_cast<int>(idx.ell + stride * i));
    }
    return Poly(std::move(h));
}

std::vector<TypeIRecord> type1_records(const Params& p, long R) {
    TypeIGenerator gen(p);
    const auto& ts = gen.prefix(R);
    std::vector<TypeIRecord> out;
    out.reserve(ts.size());
    for (long r = 0; r <= R; ++r) {
        TypeIRecord rec;
        rec.r = r;
        rec.index = decompose_index(r, p.m);
        rec.t = ts[static_cast<std::size_t>(r)];
        rec.h = extract_h(rec.t, r, p.m);
        out.push_back(std::move(rec));
    }
    return out;
}

ShiftReport verify_shift(const std::vector<TypeIVectorRecord>& records) {
    ShiftReport report;
    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
        const auto& cur = records[i].components;
        const auto& next = records[i + 1].components;
        for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
            ++report.checked;
            if (cur[j] != next[j + 1]) {
                report.violations.push_back({static_cast<long>(j), records[i].r});
            }
        }
    }
    return report;
}

bool FactorizationReport::ok() const {
    for (const auto& row : rows) {
        if (!row.identity_holds || !row.degree_h_ok || !row.degree_t_ok) return false;
    }
    return true;
}

FactorizationReport verify_factorization(const Params& p, long R) {
    TypeIGenerator gen(p);
    const auto& ts = gen.prefix(R);
    FactorizationReport report;
    for (long r = 0; r <= R; ++r) {
        FactorizationRow row;
        row.r = r;
        row.index = decompose_index(r, p.m);
        const Poly& t = ts[static_cast<std::size_t>(r)];
        try {
            const Poly h = extract_h(t, r, p.m);
            row.identity_holds =
                compose_star(h, p.m, static_cast<int>(row.index.k), static_cast<int>(row.index.ell)) == t;
            if (row.index.tau < 0) {
                row.degree_h_ok = h.is_zero();
                row.degree_t_ok = t.is_zero();
            } else {
                row.degree_h_ok = h.degree() == row.index.tau;
                row.degree_t_ok = t.degree() == row.index.d - row.index.k;
            }
        } catch (const FactorizationViolation& e) {
            row.failure = e.what();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

int SignTableEntry::observed_sign() const {
    if (plus_only > 0 && minus_only == 0) return 1;
    if (minus_only > 0 && plus_only == 0) return -1;
    return 0;
}

bool SignTableEntry::agrees_with_statement() const {
    return stated_sign == 1 ? minus_only == 0 : plus_only == 0;
}

HRecurrenceReport verify_h_recurrence(const std::vector<Poly>& hs, const Params& p) {
    HRecurrenceReport report;
    report.m = p.m;
    const long R = static_cast<long>(hs.size()) - 1;
    for (long r = p.m; r <= R; ++r) {
        const IndexDecomposition idx = decompose_index(r, p.m);
        const Poly& prev = hs[static_cast<std::size_t>(r - p.m)];
        const Poly lead = idx.ell == 0 ? shift_up(prev, 1) : prev;
        const Poly back = r - p.m - 1 >= 0 ? hs[static_cast<std::size_t>(r - p.m - 1)] : Poly{};
        const Poly lhs = p.c * hs[static_cast<std::size_t>(r)];

        SignObservation obs;
        obs.r = r;
        obs.k = idx.k;
        obs.ell = idx.ell;
        obs.plus_holds = lhs == lead + back;
        obs.minus_holds = lhs == lead - back;
        obs.stated_sign = idx.ell == 0 ? (p.m % 2 == 1 ? 1 : -1) : 1;
        if (!obs.plus_holds && !obs.minus_holds) {
            throw NoVariantMatches("no sign variant of the h-recurrence holds at r=" + std::to_string(r) +
                                   " (m=" + std::to_string(p.m) + ", c=" + to_string(p.c) + ")");
        }

        auto& entry = report.table[{idx.k == 0, idx.ell == 0}];
        entry.k_zero = idx.k == 0;
        entry.ell_zero = idx.ell == 0;
        entry.stated_sign = obs.stated_sign;
        if (obs.plus_holds && obs.minus_holds) {
            ++entry.both;
        } else if (obs.plus_holds) {
            ++entry.plus_only;
        } else {
            ++entry.minus_only;
        }
        report.rows.push_back(obs);
    }
    return report;
}

} // namespace chebsys
