#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chebsys/bigfloat.hpp"
#include "chebsys/poly.hpp"

namespace chebsys::cli {

inline constexpr Bits kDefaultPrecision = 128;

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInvalidInput = 2;

/// `re0:re1:n,im0:im1:n`; n >= 1 points per axis, endpoints included.
struct GridSpec {
    double re0 = 0.0, re1 = 0.0;
    long re_n = 1;
    double im0 = 0.0, im1 = 0.0;
    long im_n = 1;

    std::vector<std::complex<double>> points() const;
};

GridSpec parse_grid(const std::string& text);
std::complex<double> parse_point(const std::string& text);
std::vector<long> parse_index_list(const std::string& text);

struct RunConfig {
    std::string command;
    int m = 1;
    Rational c = 1;
    long R = 10;
    long n_max = -1;  ///< -1: same as R
    long r_max = -1;  ///< -1: command default
    std::vector<long> r_list;
    std::optional<std::complex<double>> z;
    std::optional<GridSpec> grid;
    std::string grid_text;
    long samples = 0;
    Bits precision = kDefaultPrecision;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string out;

    /// Throws InvalidInput on a config no command can run.
    void validate() const;
};

/// Precision used when --precision is absent: CHEBSYS_PRECISION if set,
/// kDefaultPrecision otherwise. Throws InvalidInput on a malformed value.
Bits default_precision();

int cmd_gen(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);
int cmd_branches(const RunConfig& cfg);
int cmd_asymptote(const RunConfig& cfg);
int cmd_roots(const RunConfig& cfg);

/// Parses argv and dispatches; messages go to `err`. Returns an exit code.
int run(int argc, const char* const* argv, std::ostream& err);

} // namespace chebsys::cli
