#include "chebsys/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chebsys/algebraic.hpp"
#include "chebsys/banded_operator.hpp"
#include "chebsys/errors.hpp"
#include "chebsys/recurrence.hpp"
#include "chebsys/roots.hpp"

namespace chebsys::cli {

using nlohmann::json;

namespace {

std::string fmt17(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// JSON numbers cannot hold inf/nan; those become null.
json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

double parse_double(const std::string& s, const char* what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw InvalidInput(std::string("bad number for ") + what + ": '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw InvalidInput(std::string("bad number for ") + what + ": '" + s + "'");
    return v;
}

long parse_long(const std::string& s, const char* what) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw InvalidInput(std::string("bad integer for ") + what + ": '" + s + "'");
    }
    if (used != s.size()) throw InvalidInput(std::string("bad integer for ") + what + ": '" + s + "'");
    return v;
}

json poly_json(const Poly& p) {
    json coeffs = json::array();
    for (const auto& a : p.coeffs()) coeffs.push_back(to_string(a));
    return {{"degree", p.degree()}, {"coeffs", coeffs}, {"text", p.to_string('x')}};
}

std::string coeff_field(const Poly& p) {
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) s += ';';
        s += to_string(p.coeffs()[i]);
    }
    return s;
}

json index_json(const IndexDecomposition& ix) {
    return {{"d", ix.d}, {"k", ix.k}, {"tau", ix.tau}, {"ell", ix.ell}};
}

json config_json(const RunConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    j["m"] = cfg.m;
    j["c"] = to_string(cfg.c);
    j["R"] = cfg.R;
    j["n_max"] = cfg.n_max;
    j["r_max"] = cfg.r_max;
    j["r_list"] = cfg.r_list;
    j["z"] = cfg.z ? json::array({fmt17(cfg.z->real()), fmt17(cfg.z->imag())}) : json(nullptr);
    j["grid"] = cfg.grid ? json(cfg.grid_text) : json(nullptr);
    j["samples"] = cfg.samples;
    j["precision"] = cfg.precision;
    j["seed"] = cfg.seed;
    j["format"] = cfg.format;
    j["out"] = cfg.out;
    return j;
}

std::string schema(const RunConfig& cfg, const char* part = nullptr) {
    std::string s = "chebsys." + cfg.command;
    if (part) s += std::string(".") + part;
    return s + "/1";
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    return f;
}

void write_json(const std::string& path, const json& doc) {
    auto f = open_out(path);
    f << doc.dump(2) << '\n';
    if (!f) throw std::runtime_error("write failed for '" + path + "'");
}

// A flat table that serializes either as CSV with `#` header lines or as a
// JSON document holding the same rows as objects.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> notes;  ///< extra `# key: value` lines

    void write(const std::string& path, const RunConfig& cfg, const std::string& schema_id, const std::string& format) const {
        if (format == "csv") {
            auto f = open_out(path);
            f << "# schema: " << schema_id << '\n';
            f << "# config: " << config_json(cfg).dump() << '\n';
            for (const auto& [k, v] : notes) f << "# " << k << ": " << v << '\n';
            for (std::size_t i = 0; i < columns.size(); ++i) f << (i ? "," : "") << columns[i];
            f << '\n';
            for (const auto& row : rows) {
                for (std::size_t i = 0; i < row.size(); ++i) f << (i ? "," : "") << row[i];
                f << '\n';
            }
            if (!f) throw std::runtime_error("write failed for '" + path + "'");
            return;
        }
        json doc;
        doc["schema"] = schema_id;
        doc["config"] = config_json(cfg);
        for (const auto& [k, v] : notes) doc["notes"][k] = v;
        doc["columns"] = columns;
        doc["rows"] = json::array();
        for (const auto& row : rows) {
            json obj;
            for (std::size_t i = 0; i < row.size(); ++i) obj[columns[i]] = row[i];
            doc["rows"].push_back(obj);
        }
        write_json(path, doc);
    }
};

const char* flag(bool b) { return b ? "true" : "false"; }

Params params_of(const RunConfig& cfg) { return Params::make(cfg.m, cfg.c); }

} // namespace

std::vector<std::complex<double>> GridSpec::points() const {
    std::vector<std::complex<double>> out;
    const auto axis = [](double a, double b, long n, long i) {
        return n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    };
    for (long j = 0; j < im_n; ++j) {
        for (long i = 0; i < re_n; ++i) out.emplace_back(axis(re0, re1, re_n, i), axis(im0, im1, im_n, j));
    }
    return out;
}

GridSpec parse_grid(const std::string& text) {
    const auto axes = split(text, ',');
    if (axes.size() != 2) throw InvalidInput("grid must look like re0:re1:n,im0:im1:n");
    GridSpec g;
    const auto parse_axis = [](const std::string& s, double& lo, double& hi, long& n) {
        const auto parts = split(s, ':');
        if (parts.size() != 3) throw InvalidInput("grid axis must look like lo:hi:n, got '" + s + "'");
        lo = parse_double(parts[0], "grid");
        hi = parse_double(parts[1], "grid");
        n = parse_long(parts[2], "grid");
        if (n < 1) throw InvalidInput("grid axis needs at least one point");
    };
    parse_axis(axes[0], g.re0, g.re1, g.re_n);
    parse_axis(axes[1], g.im0, g.im1, g.im_n);
    return g;
}

std::complex<double> parse_point(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 2) throw InvalidInput("point must look like RE,IM, got '" + text + "'");
    return {parse_double(parts[0], "z"), parse_double(parts[1], "z")};
}

std::vector<long> parse_index_list(const std::string& text) {
    std::vector<long> out;
    for (const auto& s : split(text, ',')) {
        const long v = parse_long(s, "index list");
        if (v < 0) throw InvalidInput("indices must be non-negative");
        out.push_back(v);
    }
    if (out.empty()) throw InvalidInput("empty index list");
    return out;
}

Bits default_precision() {
    const char* env = std::getenv("CHEBSYS_PRECISION");
    if (!env || !*env) return kDefaultPrecision;
    return parse_long(env, "CHEBSYS_PRECISION");
}

void RunConfig::validate() const {
    Params::make(m, c);
    if (precision < kDoubleBits) throw InvalidInput("precision must be at least 53 bits");
    if (R < 0) throw InvalidInput("--R must be non-negative");
    if (n_max < -1) throw InvalidInput("--n-max must be non-negative");
    if (r_max < -1) throw InvalidInput("--r-max must be non-negative");
    if (samples < 0) throw InvalidInput("--samples must be non-negative");
    if (format != "json" && format != "csv") throw InvalidInput("--format must be json or csv");
    if (out.empty()) throw InvalidInput("--out is required");
}

int cmd_gen(const RunConfig& cfg) {
    const Params p = params_of(cfg);
    const long n_max = cfg.n_max >= 0 ? cfg.n_max : cfg.R;
    const auto records = type1_records(p, cfg.R);
    const auto vectors = gen_type1_vectors(p, cfg.R);
    const auto T = gen_type2(p, n_max);

    if (cfg.format == "json") {
        json doc;
        doc["schema"] = schema(cfg);
        doc["config"] = config_json(cfg);
        doc["type1"] = json::array();
        for (std::size_t i = 0; i < records.size(); ++i) {
            const auto& rec = records[i];
            json comps = json::array();
            for (const auto& comp : vectors[i].components) comps.push_back(poly_json(comp));
            doc["type1"].push_back({{"r", rec.r},
                                    {"index", index_json(rec.index)},
                                    {"t", poly_json(rec.t)},
                                    {"h", {{"degree", rec.h.degree()},
                                           {"coeffs", poly_json(rec.h)["coeffs"]},
                                           {"text", rec.h.to_string('y')}}},
                                    {"components", comps}});
        }
        doc["type2"] = json::array();
        for (std::size_t n = 0; n < T.size(); ++n) {
            json row = poly_json(T[n]);
            row["n"] = n;
            doc["type2"].push_back(row);
        }
        write_json(cfg.out, doc);
        return kOk;
    }

    Table table;
    table.columns = {"kind", "index", "component", "d", "k", "tau", "ell", "degree", "text", "coeffs"};
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& rec = records[i];
        const auto& ix = rec.index;
        const auto base = [&](const char* kind, const std::string& comp, const Poly& q, char var) {
            return std::vector<std::string>{kind, std::to_string(rec.r), comp, std::to_string(ix.d), std::to_string(ix.k),
                                            std::to_string(ix.tau), std::to_string(ix.ell), std::to_string(q.degree()),
                                            q.to_string(var), coeff_field(q)};
        };
        table.rows.push_back(base("t", "", rec.t, 'x'));
        table.rows.push_back(base("h", "", rec.h, 'y'));
        for (std::size_t j = 0; j < vectors[i].components.size(); ++j) {
            table.rows.push_back(base("t_vec", std::to_string(j), vectors[i].components[j], 'x'));
        }
    }
    for (std::size_t n = 0; n < T.size(); ++n) {
        table.rows.push_back({"T", std::to_string(n), "", "", "", "", "", std::to_string(T[n].degree()),
                              T[n].to_string('x'), coeff_field(T[n])});
    }
    table.write(cfg.out, cfg, schema(cfg), "csv");
    return kOk;
}

namespace {

struct Check {
    std::string name;
    bool hard = true;
    std::string status;  ///< PASS, FAIL, VACUOUS or an informational label
    json witness;
    bool failed() const { return hard && status == "FAIL"; }
};

RationalVector random_vector(std::mt19937_64& gen, int N) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    RationalVector v(static_cast<std::size_t>(N));
    for (auto& x : v) {
        x = Rational(num(gen), den(gen));
        x.canonicalize();
    }
    return v;
}

Check check_factorization(const Params& p, long R) {
    Check c{"factorization", true, "PASS", json::object()};
    const auto rep = verify_factorization(p, R);
    c.witness["rows_checked"] = rep.rows.size();
    for (const auto& row : rep.rows) {
        if (!row.identity_holds || !row.degree_h_ok || !row.degree_t_ok) {
            c.status = "FAIL";
            c.witness["first_failure"] = {{"r", row.r}, {"index", index_json(row.index)}, {"reason", row.failure}};
            break;
        }
    }
    return c;
}

Check check_shift(const Params& p, long R) {
    Check c{"shift", true, "PASS", json::object()};
    const auto rep = verify_shift(gen_type1_vectors(p, R));
    c.witness["pairs_checked"] = rep.checked;
    if (rep.checked == 0) c.status = "VACUOUS";
    if (!rep.ok()) {
        c.status = "FAIL";
        c.witness["first_failure"] = {{"j", rep.violations.front().j}, {"r", rep.violations.front().r}};
    }
    return c;
}

Check check_jumps(const Params& p, bool type2, long top) {
    Check c{type2 ? "jump_type2" : "jump_type1", true, "PASS", json::object()};
    json failures = json::array();
    for (long i = 0; i <= top; ++i) {
        if (!(type2 ? jump_check_type2(p, i) : jump_check_type1(p, i))) failures.push_back(i);
    }
    c.witness["checked_up_to"] = top;
    if (!failures.empty()) {
        c.status = "FAIL";
        c.witness["failing_indices"] = failures;
    }
    return c;
}

Check check_gram(const Params& p, long n_max, long r_max) {
    Check c{"biorthogonality", true, "PASS", json::object()};
    const auto rep = gram_matrix(p, n_max, r_max);
    c.witness["n_max"] = n_max;
    c.witness["r_max"] = r_max;
    c.witness["truncation"] = rep.N;
    if (!rep.is_identity()) {
        c.status = "FAIL";
        json bad = json::array();
        for (std::size_t n = 0; n < rep.gram.size() && bad.size() < 10; ++n) {
            for (std::size_t r = 0; r < rep.gram[n].size() && bad.size() < 10; ++r) {
                if (rep.gram[n][r] != (n == r ? 1 : 0)) bad.push_back({{"n", n}, {"r", r}, {"value", to_string(rep.gram[n][r])}});
            }
        }
        c.witness["entries"] = bad;
    }
    return c;
}

Check check_transpose(const Params& p, std::uint64_t seed) {
    Check c{"transpose", true, "PASS", json::object()};
    std::mt19937_64 gen(seed);
    const int N = 3 * p.m + 8;
    const BandedOperator op(N, p);
    constexpr int kTrials = 16;
    for (int t = 0; t < kTrials; ++t) {
        const auto v = random_vector(gen, N);
        const auto w = random_vector(gen, N);
        if (dot(op.apply(v).v, w) != dot(v, op.apply_transpose(w).v)) {
            c.status = "FAIL";
            c.witness["trial"] = t;
            break;
        }
    }
    c.witness["trials"] = kTrials;
    c.witness["N"] = N;
    return c;
}

Check sign_study(const Params& p, long R) {
    Check c{"h_recurrence_signs", false, "REPORTED", json::object()};
    std::vector<Poly> hs;
    for (const auto& rec : type1_records(p, R)) hs.push_back(rec.h);
    try {
        const auto rep = verify_h_recurrence(hs, p);
        json table = json::array();
        bool all_agree = true;
        for (const auto& [key, e] : rep.table) {
            table.push_back({{"k_zero", e.k_zero},
                             {"ell_zero", e.ell_zero},
                             {"stated_sign", e.stated_sign},
                             {"observed_sign", e.observed_sign()},
                             {"plus_only", e.plus_only},
                             {"minus_only", e.minus_only},
                             {"either", e.both},
                             {"agrees", e.agrees_with_statement()}});
            all_agree = all_agree && e.agrees_with_statement();
        }
        c.witness["table"] = table;
        c.status = all_agree ? "AGREES" : "DISAGREES";
    } catch (const NoVariantMatches& ex) {
        c.status = "NO_VARIANT";
        c.witness["message"] = ex.what();
    }
    return c;
}

Check conjecture(const Params& p, long r_max, Bits bits) {
    Check c{"real_roots_probe", false, "", json::object()};
    const auto rep = conjecture_probe(p, r_max, bits);
    c.status = rep.classification;
    c.witness = {{"r_max", r_max},
                 {"offending_r", rep.offending_r},
                 {"max_rel_imag", num(rep.max_rel_imag)},
                 {"min_separation", num(rep.min_separation)}};
    return c;
}

} // namespace

int cmd_verify(const RunConfig& cfg) {
    const Params p = params_of(cfg);
    const long n_max = cfg.n_max >= 0 ? cfg.n_max : cfg.R;
    const long probe_max = cfg.r_max >= 0 ? cfg.r_max : std::min<long>(cfg.R, 60);

    std::vector<Check> checks;
    checks.push_back(check_factorization(p, cfg.R));
    checks.push_back(check_shift(p, cfg.R));
    checks.push_back(check_jumps(p, true, n_max));
    checks.push_back(check_jumps(p, false, cfg.R));
    checks.push_back(check_gram(p, n_max, cfg.R));
    checks.push_back(check_transpose(p, cfg.seed));
    checks.push_back(sign_study(p, cfg.R));
    checks.push_back(conjecture(p, probe_max, cfg.precision));

    const bool failed = std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.failed(); });
    if (cfg.format == "json") {
        json doc;
        doc["schema"] = schema(cfg);
        doc["config"] = config_json(cfg);
        doc["status"] = failed ? "FAIL" : "PASS";
        doc["checks"] = json::array();
        for (const auto& c : checks) {
            doc["checks"].push_back({{"name", c.name}, {"hard", c.hard}, {"status", c.status}, {"witness", c.witness}});
        }
        write_json(cfg.out, doc);
    } else {
        Table table;
        table.columns = {"check", "hard", "status", "witness"};
        table.notes.emplace_back("status", failed ? "FAIL" : "PASS");
        for (const auto& c : checks) {
            // The witness is JSON; quote it for CSV.
            std::string w = c.witness.dump();
            std::string quoted = "\"";
            for (char ch : w) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            quoted += '"';
            table.rows.push_back({c.name, flag(c.hard), c.status, quoted});
        }
        table.write(cfg.out, cfg, schema(cfg), "csv");
    }
    return failed ? kVerificationFailed : kOk;
}

int cmd_branches(const RunConfig& cfg) {
    const Params p = params_of(cfg);
    std::vector<std::complex<double>> zs;
    if (cfg.z) zs.push_back(*cfg.z);
    if (cfg.grid) {
        const auto g = cfg.grid->points();
        zs.insert(zs.end(), g.begin(), g.end());
    }
    if (cfg.samples > 0) {
        const auto s = sample_points(p, static_cast<std::size_t>(cfg.samples), cfg.seed);
        zs.insert(zs.end(), s.begin(), s.end());
    }
    if (zs.empty()) throw InvalidInput("branches needs --z, --grid or --samples");

    const int nb = p.m + 1;
    Table table;
    table.columns = {"z_re", "z_im"};
    for (int j = 0; j < nb; ++j) {
        table.columns.push_back("lambda" + std::to_string(j) + "_re");
        table.columns.push_back("lambda" + std::to_string(j) + "_im");
    }
    for (int j = 0; j < nb; ++j) table.columns.push_back("mod" + std::to_string(j));
    for (const char* col : {"max_residual", "tie", "status", "on_s0", "on_even", "on_odd", "on_s_m"}) table.columns.emplace_back(col);
    for (int j = 0; j < nb; ++j) table.columns.push_back("in_omega" + std::to_string(j));
    table.columns.emplace_back("in_d");

    const StarGeometry geom = make_star_geometry(p);
    for (const auto& z : zs) {
        std::vector<std::string> row{fmt17(z.real()), fmt17(z.imag())};
        std::string status = "ok";
        std::optional<BranchSet> bs;
        try {
            bs = solve_branches(p, BigComplex(z, cfg.precision), cfg.precision);
        } catch (const SolverDivergence&) {
            status = "solver_divergence";
        }
        if (bs) {
            for (const auto& l : bs->lambdas) {
                const auto v = l.to_std();
                row.push_back(fmt17(v.real()));
                row.push_back(fmt17(v.imag()));
            }
            for (double mod : bs->moduli()) row.push_back(fmt17(mod));
            row.push_back(fmt17(*std::max_element(bs->residuals.begin(), bs->residuals.end())));
            row.push_back(flag(bs->tie));
        } else {
            row.insert(row.end(), static_cast<std::size_t>(3 * nb + 2), "");
        }
        row.push_back(status);
        const auto reg = region_classify(p, z, 1e-9 * geom.a);
        row.push_back(flag(reg.on_s0));
        row.push_back(flag(reg.on_even));
        row.push_back(flag(reg.on_odd));
        row.push_back(flag(reg.on_s_m));
        for (bool b : reg.in_omega) row.push_back(flag(b));
        row.push_back(flag(reg.in_d()));
        table.rows.push_back(std::move(row));
    }
    table.write(cfg.out, cfg, schema(cfg), cfg.format == "json" ? "json" : "csv");

    json geo;
    geo["schema"] = schema(cfg, "geometry");
    geo["config"] = config_json(cfg);
    geo["a"] = geom.a;
    geo["rays"] = {{"s0_segments", geom.rays_s0}, {"even", geom.rays_even}, {"odd", geom.rays_odd}, {"s_m", geom.rays_m()}};
    geo["branch_points"] = json::array();
    for (const auto& bp : branch_points(p)) {
        geo["branch_points"].push_back({{"re", bp.z.real()},
                                        {"im", bp.z.imag()},
                                        {"discriminant_residual", bp.discriminant_residual},
                                        {"critical_residual", bp.critical_residual}});
    }
    write_json(cfg.out + ".geometry.json", geo);
    return kOk;
}

int cmd_asymptote(const RunConfig& cfg) {
    const Params p = params_of(cfg);
    if (!cfg.z) throw InvalidInput("asymptote needs --z");
    const long r_max = cfg.r_max >= 0 ? cfg.r_max : 80;
    const AsymptoticScan scan = asymptotic_scan(p, *cfg.z, r_max, cfg.precision);

    Table table;
    table.columns = {"r", "e_r", "log10_e_r", "decay_rate", "branch_ratio", "noise_limited"};
    table.notes = {{"L_re", fmt17(scan.limit.real())},
                   {"L_im", fmt17(scan.limit.imag())},
                   {"window", std::to_string(scan.window)},
                   {"working_bits", std::to_string(scan.working_bits)}};
    for (const auto& row : scan.rows) {
        table.rows.push_back({std::to_string(row.r), fmt17(row.error), fmt17(row.log10_error), fmt17(row.decay_rate),
                              fmt17(scan.branch_ratio), flag(row.noise_limited)});
    }
    table.write(cfg.out, cfg, schema(cfg), cfg.format == "json" ? "json" : "csv");

    json summary;
    summary["schema"] = schema(cfg, "summary");
    summary["config"] = config_json(cfg);
    summary["L"] = {{"re", fmt17(scan.limit.real())}, {"im", fmt17(scan.limit.imag())}};
    summary["branch_ratio"] = num(scan.branch_ratio);
    summary["final_decay_rate"] = num(scan.final_decay_rate());
    summary["window"] = scan.window;
    summary["working_bits"] = scan.working_bits;
    write_json(cfg.out + ".summary.json", summary);
    return kOk;
}

int cmd_roots(const RunConfig& cfg) {
    const Params p = params_of(cfg);
    std::vector<long> r_list = cfg.r_list;
    if (r_list.empty()) {
        for (long r = 0; r <= cfg.R; ++r) r_list.push_back(r);
    }
    std::sort(r_list.begin(), r_list.end());
    r_list.erase(std::unique(r_list.begin(), r_list.end()), r_list.end());
    const long probe_max = cfg.r_max >= 0 ? cfg.r_max : r_list.back();

    TypeIGenerator gen(p);
    gen.prefix(r_list.back());

    Table table;
    table.columns = {"r", "root", "re", "im", "star_distance", "multiplicity", "residual"};
    json per_r = json::array();
    for (long r : r_list) {
        TypeIRecord rec;
        rec.r = r;
        rec.index = decompose_index(r, p.m);
        rec.t = gen.at(r);
        json info = {{"r", r}, {"index", index_json(rec.index)}, {"degree", rec.t.degree()}};
        if (rec.t.is_zero()) {
            info["status"] = "zero_polynomial";
            per_r.push_back(info);
            continue;
        }
        rec.h = extract_h(rec.t, r, p.m);
        try {
            const RootReport rep = roots_of_t(rec, p, cfg.precision);
            for (std::size_t i = 0; i < rep.t_roots.size(); ++i) {
                const auto& root = rep.t_roots[i];
                table.rows.push_back({std::to_string(r), std::to_string(i), fmt17(root.value.real()),
                                      fmt17(root.value.imag()), fmt17(root.star_distance),
                                      std::to_string(root.multiplicity), fmt17(root.residual)});
            }
            info["status"] = "ok";
            info["root_count"] = rep.t_roots.size();
            info["origin_multiplicity"] = rep.origin_multiplicity;
            info["max_star_distance"] = num(rep.max_star_distance);
            info["mean_star_distance"] = num(rep.mean_star_distance);
            info["max_rel_imag_h"] = num(rep.max_rel_imag_h);
            info["max_residual"] = num(rep.max_residual);
            info["orbit_pairing_error"] = num(orbit_pairing_error(rep.t_roots, p.m));
        } catch (const ConvergenceFailure& ex) {
            info["status"] = "convergence_failure";
            info["message"] = ex.what();
            info["polynomial"] = ex.polynomial();
        }
        per_r.push_back(info);
    }
    table.write(cfg.out, cfg, schema(cfg), cfg.format == "json" ? "json" : "csv");

    json summary;
    summary["schema"] = schema(cfg, "summary");
    summary["config"] = config_json(cfg);
    summary["per_r"] = per_r;
    try {
        const auto att = attraction_study(p, r_list, cfg.precision);
        json rows = json::array();
        for (const auto& row : att.rows) {
            rows.push_back({{"r", row.r},
                            {"root_count", row.root_count},
                            {"max_star_distance", num(row.max_star_distance)},
                            {"mean_star_distance", num(row.mean_star_distance)},
                            {"vacuous", row.vacuous}});
        }
        summary["attraction"] = {{"rows", rows}, {"trend", att.mean_trend}, {"max_trend", att.max_trend}};
    } catch (const ConvergenceFailure& ex) {
        summary["attraction"] = {{"trend", "convergence_failure"}, {"message", ex.what()}};
    }
    try {
        const auto probe = conjecture_probe(p, probe_max, cfg.precision);
        summary["conjecture"] = {{"classification", probe.classification},
                                 {"r_max", probe_max},
                                 {"offending_r", probe.offending_r},
                                 {"max_rel_imag", num(probe.max_rel_imag)},
                                 {"min_separation", num(probe.min_separation)}};
    } catch (const ConvergenceFailure& ex) {
        summary["conjecture"] = {{"classification", "INCONCLUSIVE"}, {"message", ex.what()}};
    }
    write_json(cfg.out + ".summary.json", summary);
    return kOk;
}

int run(int argc, const char* const* argv, std::ostream& err) {
    CLI::App app{"Star Chebyshev multiple orthogonal polynomials: exact generation, verification and numerics"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string c_text, z_text, grid_text, r_list_text;
    std::optional<long> precision;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--m", cfg.m, "star order m >= 1")->required();
        sub->add_option("--c", c_text, "positive rational p/q")->required();
        sub->add_option("--R", cfg.R, "largest type I index");
        sub->add_option("--n-max", cfg.n_max, "largest type II index (default R)");
        sub->add_option("--r-max", cfg.r_max, "probe or scan limit");
        sub->add_option("--z", z_text, "point RE,IM");
        sub->add_option("--grid", grid_text, "re0:re1:n,im0:im1:n");
        sub->add_option("--precision", precision, "working precision in bits (>= 53)");
        sub->add_option("--seed", cfg.seed, "seed for sampled points");
        sub->add_option("--format", cfg.format, "json or csv");
        sub->add_option("--out", cfg.out, "output path")->required();
    };
    CLI::App* gen = app.add_subcommand("gen", "coefficient tables of t_r, h_r, vector components and T_n");
    CLI::App* verify = app.add_subcommand("verify", "exact structural checks; exit 1 if any fails");
    CLI::App* branches = app.add_subcommand("branches", "branches of c l^{m+1} - z l + 1 at points");
    CLI::App* asymptote = app.add_subcommand("asymptote", "convergence of t_r / lambda_m^r to its limit");
    CLI::App* roots = app.add_subcommand("roots", "zeros of t_r, attraction and real-root probe");
    for (CLI::App* sub : {gen, verify, branches, asymptote, roots}) add_common(sub);
    branches->add_option("--samples", cfg.samples, "number of seeded sample points");
    roots->add_option("--r-list", r_list_text, "comma separated indices (default 0..R)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        err << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        err << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kInvalidInput;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        cfg.c = parse_rational(c_text);
        cfg.precision = precision ? *precision : default_precision();
        if (!z_text.empty()) cfg.z = parse_point(z_text);
        if (!grid_text.empty()) {
            cfg.grid = parse_grid(grid_text);
            cfg.grid_text = grid_text;
        }
        if (!r_list_text.empty()) cfg.r_list = parse_index_list(r_list_text);
        cfg.validate();

        if (cfg.command == "gen") return cmd_gen(cfg);
        if (cfg.command == "verify") return cmd_verify(cfg);
        if (cfg.command == "branches") return cmd_branches(cfg);
        if (cfg.command == "asymptote") return cmd_asymptote(cfg);
        return cmd_roots(cfg);
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const OnStarSet& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
}

} // namespace chebsys::cli
