#pragma once

#include <vector>

#include "chebsys/poly.hpp"
#include "chebsys/recurrence.hpp"

namespace chebsys {

using RationalVector = std::vector<Rational>;

RationalVector unit_vector(int N, int j);
Rational dot(const RationalVector& a, const RationalVector& b);

/// Result of applying a truncated operator. `overflow` is set when a nonzero
/// contribution would have landed at an index >= N and was dropped.
struct Applied {
    RationalVector v;
    bool overflow = false;
};

/// N x N truncation of the banded matrix with entries
///   entry(i, j) = c  if j = i - m,
///                 1  if j = i + 1,
///                 0  otherwise.
/// Columns: T e_j = e_{j-1} + c e_{j+m}; rows: T^T e_j = e_{j+1} + c e_{j-m}.
/// The matrix is never stored.
class BandedOperator {
public:
    BandedOperator(int N, Params params);

    int size() const { return N_; }
    const Params& params() const { return params_; }
    Rational entry(int i, int j) const;

    Applied apply(const RationalVector& v) const;
    Applied apply_transpose(const RationalVector& v) const;
    /// p(T) v or p(T^T) v by Horner's scheme.
    Applied apply_poly(const Poly& p, bool transpose, const RationalVector& v) const;

private:
    int N_;
    Params params_;
};

/// Truncation that keeps every computation on indices <= max(n, r) exact.
int default_truncation(const Params& p, long max_index);

/// T_n(T^T) e_0 == e_n exactly.
bool jump_check_type2(const Params& p, long n);
/// sum_j t_{j,r}(T) e_j == e_r exactly.
bool jump_check_type1(const Params& p, long r);

/// (t_r(T) . E) . (T_n(T^T) e_0); N = 0 selects default_truncation.
Rational biorthogonality(const Params& p, long n, long r, int N = 0);

struct GramReport {
    long n_max = 0;
    long r_max = 0;
    int N = 0;
    std::vector<std::vector<Rational>> gram;  ///< gram[n][r]
    bool overflow = false;
    bool is_identity() const;
};

/// Pairing matrix over n <= n_max, r <= r_max; N = 0 selects
/// default_truncation.
GramReport gram_matrix(const Params& p, long n_max, long r_max, int N = 0);

} // namespace chebsys
