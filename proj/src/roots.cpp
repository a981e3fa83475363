#include "chebsys/roots.hpp"

#include <algorithm>
#include <cmath>

#include "chebsys/errors.hpp"
#include "chebsys/polyroots.hpp"

namespace chebsys {

namespace {

constexpr Bits kMaxRootBits = 4096;

std::vector<BigComplex> rounded_coeffs(const Poly& p, Bits bits) {
    std::vector<BigComplex> out;
    out.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) out.emplace_back(a, bits);
    return out;
}

// For every root of `from`, distance to the nearest root of `to`, relative
// to max(1, |root|); returns the maximum.
double max_matching_change(const std::vector<BigComplex>& from, const std::vector<BigComplex>& to) {
    double worst = 0.0;
    for (const auto& x : from) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& y : to) best = std::min(best, abs(x - y).to_double());
        worst = std::max(worst, best / std::max(1.0, abs(x).to_double()));
    }
    return worst;
}

double max_abs_coeff(const Poly& p) {
    double best = 0.0;
    for (const auto& a : p.coeffs()) best = std::max(best, std::fabs(a.get_d()));
    return best;
}

} // namespace

HRootResult solve_h_roots(const Poly& h, Bits bits) {
    if (h.is_zero()) throw InvalidInput("roots_of_h: zero polynomial has no finite root set");
    HRootResult out;
    out.working_bits = bits;
    if (h.degree() == 0) return out;

    Bits work = bits + 32;
    AberthResult prev = aberth_roots(rounded_coeffs(h, work), work);
    while (true) {
        const Bits next_bits = 2 * work;
        AberthResult next = aberth_roots(rounded_coeffs(h, next_bits), next_bits, prev.roots);
        const double change = max_matching_change(prev.roots, next.roots);
        const bool settled = change <= std::ldexp(1.0, static_cast<int>(-std::min<Bits>(bits, 1000)));
        if (settled || next_bits >= kMaxRootBits) {
            if (!settled && !next.converged) {
                throw ConvergenceFailure("roots of h did not settle up to " + std::to_string(next_bits) + " bits",
                                         h.to_string('y'));
            }
            out.roots = std::move(next.roots);
            out.working_bits = next_bits;
            out.accuracy = change;
            return out;
        }
        prev = std::move(next);
        work = next_bits;
    }
}

std::vector<BigComplex> roots_of_h(const Poly& h, Bits bits) { return solve_h_roots(h, bits).roots; }

std::vector<int> cluster_multiplicities(const std::vector<BigComplex>& roots) {
    double scale = 1.0;
    for (const auto& r : roots) scale = std::max(scale, abs(r).to_double());
    const double tol = 1e-7 * scale;
    std::vector<int> out(roots.size(), 0);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (abs(roots[i] - roots[j]).to_double() < tol) ++out[i];
        }
    }
    return out;
}

double distance_to_star(std::complex<double> z, const StarGeometry& g) { return distance_to_rays(z, g.rays_m()); }

RootReport roots_of_t(const TypeIRecord& rec, const Params& p, Bits bits) {
    if (rec.t.is_zero()) throw InvalidInput("roots_of_t: t_" + std::to_string(rec.r) + " is the zero polynomial");
    const StarGeometry geom = make_star_geometry(p);
    RootReport report;
    report.r = rec.r;
    report.index = rec.index;
    report.origin_multiplicity = rec.index.ell;

    if (rec.h.degree() > 0) {
        HRootResult hr = solve_h_roots(rec.h, bits);
        report.h_roots = std::move(hr.roots);
        report.h_accuracy = hr.accuracy;
    }
    report.h_multiplicity = cluster_multiplicities(report.h_roots);
    for (std::size_t i = 0; i < report.h_roots.size(); ++i) {
        const auto& y = report.h_roots[i];
        const double im = std::fabs(y.im.to_double());
        const double mod = abs(y).to_double();
        report.max_imag_h = std::max(report.max_imag_h, im);
        if (mod > 0.0) report.max_rel_imag_h = std::max(report.max_rel_imag_h, im / mod);
        for (std::size_t j = i + 1; j < report.h_roots.size(); ++j) {
            report.min_separation_h = std::min(report.min_separation_h, abs(y - report.h_roots[j]).to_double());
        }
    }

    std::vector<BigComplex> zs;
    for (const auto& y : report.h_roots) {
        for (auto& w : nth_roots(y, p.m + 1)) zs.push_back(std::move(w));
    }
    const Bits root_bits = report.h_roots.empty() ? bits : report.h_roots.front().precision();
    for (long i = 0; i < report.origin_multiplicity; ++i) zs.emplace_back(root_bits);

    const std::vector<int> mult = cluster_multiplicities(zs);
    const double norm = max_abs_coeff(rec.t);
    const Bits eval_bits = std::max<Bits>(bits, 128);
    double dist_sum = 0.0;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        TRoot root{zs[i], zs[i].to_std(), 0.0, 0.0, mult[i]};
        root.star_distance = distance_to_star(root.value, geom);
        root.residual = abs(eval(rec.t, zs[i], eval_bits)).to_double() / norm;
        report.max_star_distance = std::max(report.max_star_distance, root.star_distance);
        report.max_residual = std::max(report.max_residual, root.residual);
        if (!zs[i].is_zero()) {
            dist_sum += root.star_distance;
            ++nonzero;
        }
        report.t_roots.push_back(std::move(root));
    }
    report.mean_star_distance = nonzero > 0 ? dist_sum / static_cast<double>(nonzero) : 0.0;
    return report;
}

double orbit_pairing_error(const std::vector<TRoot>& roots, int m) {
    const std::complex<double> rot = std::polar(1.0, 2.0 * M_PI / (m + 1));
    double worst = 0.0;
    for (const auto& a : roots) {
        if (a.z.is_zero()) continue;
        const std::complex<double> target = a.value * rot;
        double best = std::numeric_limits<double>::infinity();
        for (const auto& b : roots) best = std::min(best, std::abs(b.value - target));
        worst = std::max(worst, best / std::max(1.0, std::abs(a.value)));
    }
    return worst;
}

std::string trend_of(const std::vector<double>& values) {
    if (values.empty()) return "vacuous";
    bool up = false;
    bool down = false;
    for (std::size_t i = 1; i < values.size(); ++i) {
        const double slack = 1e-12 * (1.0 + std::fabs(values[i - 1]));
        if (values[i] > values[i - 1] + slack) up = true;
        if (values[i] < values[i - 1] - slack) down = true;
    }
    if (up && down) return "mixed";
    return up ? "increasing" : "non-increasing";
}

AttractionTable attraction_study(const Params& p, const std::vector<long>& r_list, Bits bits) {
    if (!std::is_sorted(r_list.begin(), r_list.end())) throw InvalidInput("attraction_study needs ascending r list");
    AttractionTable table;
    if (r_list.empty()) {
        table.mean_trend = table.max_trend = "vacuous";
        return table;
    }
    TypeIGenerator gen(p);
    gen.prefix(r_list.back());
    std::vector<double> means, maxes;
    for (long r : r_list) {
        AttractionRow row;
        row.r = r;
        TypeIRecord rec;
        rec.r = r;
        rec.index = decompose_index(r, p.m);
        rec.t = gen.at(r);
        rec.h = extract_h(rec.t, r, p.m);
        if (rec.t.degree() <= 0) {
            row.vacuous = true;
        } else {
            const RootReport rep = roots_of_t(rec, p, bits);
            row.root_count = rep.t_roots.size();
            row.max_star_distance = rep.max_star_distance;
            row.mean_star_distance = rep.mean_star_distance;
            means.push_back(row.mean_star_distance);
            maxes.push_back(row.max_star_distance);
        }
        table.rows.push_back(row);
    }
    table.mean_trend = trend_of(means);
    table.max_trend = trend_of(maxes);
    return table;
}

namespace {

void measure(const HRootResult& hr, ConjectureRow& row) {
    row.max_rel_imag = 0.0;
    row.min_separation = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hr.roots.size(); ++i) {
        const auto& y = hr.roots[i];
        const double mod = std::max(abs(y).to_double(), 1e-300);
        row.max_rel_imag = std::max(row.max_rel_imag, std::fabs(y.im.to_double()) / mod);
        for (std::size_t j = i + 1; j < hr.roots.size(); ++j) {
            const double sep = abs(y - hr.roots[j]).to_double() / std::max(1.0, mod);
            row.min_separation = std::min(row.min_separation, sep);
        }
    }
    row.accuracy = hr.accuracy;
    const auto mult = cluster_multiplicities(hr.roots);
    row.clustered = std::any_of(mult.begin(), mult.end(), [](int k) { return k >= 2; });
}

int severity(const std::string& cls) {
    if (cls == "COUNTEREXAMPLE") return 2;
    if (cls == "INCONCLUSIVE") return 1;
    return 0;
}

} // namespace

ConjectureReport conjecture_probe(const Params& p, long r_max, Bits bits) {
    ConjectureReport report;
    report.classification = "PASS";
    const auto records = type1_records(p, r_max);
    const double real_floor = std::ldexp(1.0, -static_cast<int>(bits / 2));
    for (const auto& rec : records) {
        if (rec.h.degree() <= 0) continue;
        ConjectureRow row;
        row.r = rec.r;
        row.degree_h = rec.h.degree();
        HRootResult hr = solve_h_roots(rec.h, bits);
        measure(hr, row);
        if (row.clustered) {
            hr = solve_h_roots(rec.h, 2 * bits);
            measure(hr, row);
            row.escalated = true;
        }

        const double noise = std::max(1e3 * row.accuracy, real_floor);
        std::string cls = "PASS";
        if (row.max_rel_imag > 1e-6 && row.max_rel_imag > noise) {
            cls = "COUNTEREXAMPLE";
        } else if (row.max_rel_imag > noise) {
            cls = "INCONCLUSIVE";
        } else if (row.clustered && row.min_separation <= noise) {
            cls = "INCONCLUSIVE";
        }
        if (severity(cls) > severity(report.classification)) {
            report.classification = cls;
            report.offending_r = rec.r;
        }
        report.max_rel_imag = std::max(report.max_rel_imag, row.max_rel_imag);
        report.min_separation = std::min(report.min_separation, row.min_separation);
        report.rows.push_back(row);
    }
    return report;
}

} // namespace chebsys
