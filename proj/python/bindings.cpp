#include <iostream>

#include <pybind11/complex.h>
#include <pybind11/iostream.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chebsys/algebraic.hpp"
#include "chebsys/banded_operator.hpp"
#include "chebsys/cli.hpp"
#include "chebsys/errors.hpp"
#include "chebsys/recurrence.hpp"
#include "chebsys/roots.hpp"

namespace py = pybind11;
using namespace chebsys;
using cd = std::complex<double>;

namespace {

Params params(int m, const std::string& c) { return Params::make(m, parse_rational(c)); }

std::vector<std::string> coeff_strings(const Poly& p) {
    std::vector<std::string> out;
    for (const auto& a : p.coeffs()) out.push_back(to_string(a));
    return out;
}

py::list type1(int m, const std::string& c, long R) {
    py::list out;
    for (const auto& rec : type1_records(params(m, c), R)) {
        py::dict row;
        row["r"] = rec.r;
        row["index"] = py::make_tuple(rec.index.d, rec.index.k, rec.index.tau, rec.index.ell);
        row["t"] = coeff_strings(rec.t);
        row["h"] = coeff_strings(rec.h);
        out.append(row);
    }
    return out;
}

std::vector<std::vector<std::string>> type2(int m, const std::string& c, long N) {
    std::vector<std::vector<std::string>> out;
    for (const auto& T : gen_type2(params(m, c), N)) out.push_back(coeff_strings(T));
    return out;
}

py::dict branches(int m, const std::string& c, cd z, Bits bits) {
    const auto bs = solve_branches(params(m, c), BigComplex(z, bits), bits);
    std::vector<cd> lambdas;
    for (const auto& l : bs.lambdas) lambdas.push_back(l.to_std());
    py::dict out;
    out["lambdas"] = lambdas;
    out["residuals"] = bs.residuals;
    out["tie"] = bs.tie;
    return out;
}

py::dict scan(int m, const std::string& c, cd z, long r_max, Bits bits) {
    const auto s = asymptotic_scan(params(m, c), z, r_max, bits);
    std::vector<double> errors, rates;
    for (const auto& row : s.rows) {
        errors.push_back(row.error);
        rates.push_back(row.decay_rate);
    }
    py::dict out;
    out["limit"] = s.limit;
    out["branch_ratio"] = s.branch_ratio;
    out["final_decay_rate"] = s.final_decay_rate();
    out["errors"] = errors;
    out["decay_rates"] = rates;
    out["working_bits"] = s.working_bits;
    return out;
}

std::vector<cd> t_roots(int m, const std::string& c, long r, Bits bits) {
    const Params p = params(m, c);
    const auto recs = type1_records(p, r);
    std::vector<cd> out;
    for (const auto& root : roots_of_t(recs.back(), p, bits).t_roots) out.push_back(root.value);
    return out;
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"chebsys"};
    for (const auto& a : args) argv.push_back(a.c_str());
    py::scoped_estream_redirect redirect;
    return cli::run(static_cast<int>(argv.size()), argv.data(), std::cerr);
}

} // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Star Chebyshev multiple orthogonal polynomials";

    py::register_exception<Error>(mod, "Error", PyExc_RuntimeError);
    // Registered later, so tried first.
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InvalidInput& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const OnStarSet& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    mod.def("type1", &type1, py::arg("m"), py::arg("c"), py::arg("R"),
            "Rows {r, index=(d, k, tau, ell), t, h} with coefficients as 'p/q' strings.");
    mod.def("type2", &type2, py::arg("m"), py::arg("c"), py::arg("N"));
    mod.def("decompose_index", [](long r, int m) {
        const auto ix = decompose_index(r, m);
        return py::make_tuple(ix.d, ix.k, ix.tau, ix.ell);
    }, py::arg("r"), py::arg("m"));
    mod.def("verify_factorization", [](int m, const std::string& c, long R) {
        return verify_factorization(params(m, c), R).ok();
    }, py::arg("m"), py::arg("c"), py::arg("R"));
    mod.def("gram_is_identity", [](int m, const std::string& c, long n_max, long r_max) {
        const auto rep = gram_matrix(params(m, c), n_max, r_max);
        return rep.is_identity() && !rep.overflow;
    }, py::arg("m"), py::arg("c"), py::arg("n_max"), py::arg("r_max"));
    mod.def("biorthogonality", [](int m, const std::string& c, long n, long r) {
        return to_string(biorthogonality(params(m, c), n, r));
    }, py::arg("m"), py::arg("c"), py::arg("n"), py::arg("r"));
    mod.def("branches", &branches, py::arg("m"), py::arg("c"), py::arg("z"), py::arg("bits") = 128);
    mod.def("explicit_t", [](int m, const std::string& c, long r, cd z, Bits bits) {
        return explicit_t(params(m, c), r, z, bits);
    }, py::arg("m"), py::arg("c"), py::arg("r"), py::arg("z"), py::arg("bits") = 128);
    mod.def("limit_L", [](int m, const std::string& c, cd z, Bits bits) {
        return limit_L(params(m, c), z, bits);
    }, py::arg("m"), py::arg("c"), py::arg("z"), py::arg("bits") = 128);
    mod.def("asymptotic_scan", &scan, py::arg("m"), py::arg("c"), py::arg("z"), py::arg("r_max"),
            py::arg("bits") = 128);
    mod.def("star_radius", [](int m, const std::string& c) { return star_radius(params(m, c)); },
            py::arg("m"), py::arg("c"));
    mod.def("branch_points", [](int m, const std::string& c) {
        std::vector<cd> out;
        for (const auto& bp : branch_points(params(m, c))) out.push_back(bp.z);
        return out;
    }, py::arg("m"), py::arg("c"));
    mod.def("roots_of_t", &t_roots, py::arg("m"), py::arg("c"), py::arg("r"), py::arg("bits") = 128);
    mod.def("conjecture_probe", [](int m, const std::string& c, long r_max, Bits bits) {
        return conjecture_probe(params(m, c), r_max, bits).classification;
    }, py::arg("m"), py::arg("c"), py::arg("r_max"), py::arg("bits") = 128);
    mod.def("run_cli", &run_cli, py::arg("args"), "Runs the command-line tool; returns its exit code.");
}
