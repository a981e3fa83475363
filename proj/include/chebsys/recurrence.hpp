#pragma once

// Type I and type II sequences of the star Chebyshev system and exact
// validators for their structure.
//
//   type I  (vector):  c t_n = x t_{n-m} - t_{n-m-1},  t_0..t_{m-1} unit vectors
//   type I  (scalar):  c t_r = x t_{r-m} - t_{r-m-1},  t_0 = 1, t_{-m..-1} = 0
//   type II:           T_{n+1} = x T_n - c T_{n-m},    T_0 = 1, T_{-m..-1} = 0
//
// Index bookkeeping: r = d m + k with 0 <= k < m and d - k = (m+1) tau + ell
// with 0 <= ell <= m. Then t_r = (-1)^k z^ell h_r(z^{m+1}) with deg h_r = tau.

#include <map>
#include <string>
#include <vector>

#include "chebsys/poly.hpp"

namespace chebsys {

struct Params {
    int m = 1;
    Rational c = 1;

    /// Validates m >= 1 and c > 0; throws InvalidInput otherwise.
    static Params make(int m, const Rational& c);
};

struct IndexDecomposition {
    long d = 0;
    long k = 0;
    long tau = 0;
    long ell = 0;

    friend bool operator==(const IndexDecomposition&, const IndexDecomposition&) = default;
};

IndexDecomposition decompose_index(long r, int m);

struct TypeIRecord {
    long r = 0;
    IndexDecomposition index;
    Poly t;
    Poly h;  ///< zero when tau = -1
};

struct TypeIVectorRecord {
    long r = 0;
    std::vector<Poly> components;  ///< t_{0,r}, ..., t_{m-1,r}
};

/// Memoizing generator for the scalar type I sequence. Extending the prefix
/// is incremental; references returned by prefix()/at() stay valid until the
/// next extension.
class TypeIGenerator {
public:
    explicit TypeIGenerator(Params params);

    const Params& params() const { return params_; }
    const Poly& at(long r);
    const std::vector<Poly>& prefix(long R);

private:
    void extend_to(long R);

    Params params_;
    Rational inv_c_;
    std::vector<Poly> t_;
};

std::vector<TypeIVectorRecord> gen_type1_vectors(const Params& p, long R);
std::vector<Poly> gen_type1_scalar(const Params& p, long R);
std::vector<Poly> gen_type2(const Params& p, long N);

/// Reads h_r off the residue class ell mod (m+1) of t_r.
/// Throws FactorizationViolation if t has support outside that class or its
/// degree disagrees with the decomposition.
Poly extract_h(const Poly& t, long r, int m);

/// t_r, h_r and the index decomposition for r = 0..R.
std::vector<TypeIRecord> type1_records(const Params& p, long R);

struct ShiftViolation {
    long j = 0;
    long r = 0;
};

struct ShiftReport {
    long checked = 0;
    std::vector<ShiftViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks t_{j,r} = t_{j+1,r+1} for every consecutive pair of records.
ShiftReport verify_shift(const std::vector<TypeIVectorRecord>& records);

struct FactorizationRow {
    long r = 0;
    IndexDecomposition index;
    bool identity_holds = false;  ///< compose_star(h) == t exactly
    bool degree_h_ok = false;     ///< deg h = tau (h = 0 when tau = -1)
    bool degree_t_ok = false;     ///< deg t = d - k (t = 0 when tau = -1)
    std::string failure;
};

struct FactorizationReport {
    std::vector<FactorizationRow> rows;
    bool ok() const;
};

/// Exact check of t_r = (-1)^k z^ell h_r(z^{m+1}) with the degree claims.
FactorizationReport verify_factorization(const Params& p, long R);

/// One index of the sign study for c h_r = z^{[ell=0]} h_{r-m} + s h_{r-m-1}.
struct SignObservation {
    long r = 0;
    long k = 0;
    long ell = 0;
    bool plus_holds = false;
    bool minus_holds = false;
    int stated_sign = 0;  ///< closed-form rule: (-1)^{m-1} if ell = 0, +1 otherwise
};

/// Aggregate over one (k == 0, ell == 0) case for a fixed m.
struct SignTableEntry {
    bool k_zero = false;
    bool ell_zero = false;
    int stated_sign = 0;
    long plus_only = 0;
    long minus_only = 0;
    long both = 0;  ///< h_{r-m-1} = 0, so either sign works
    /// +1/-1 when every discriminating index agrees, 0 if none discriminated.
    int observed_sign() const;
    bool agrees_with_statement() const;
};

struct HRecurrenceReport {
    int m = 1;
    std::vector<SignObservation> rows;
    std::map<std::pair<bool, bool>, SignTableEntry> table;  ///< key (k_zero, ell_zero)
};

/// Determines which sign variant of the h-recurrence holds at each r >= m.
/// `hs` holds h_0..h_R. Throws NoVariantMatches when neither sign works.
HRecurrenceReport verify_h_recurrence(const std::vector<Poly>& hs, const Params& p);

} // namespace chebsys
