#pragma once

#include <vector>

#include "chebsys/bigfloat.hpp"

namespace chebsys {

struct AberthResult {
    std::vector<BigComplex> roots;
    bool converged = false;
    int iterations = 0;
};

/// All roots of sum_i coeffs[i] x^i by Aberth-Ehrlich simultaneous
/// iteration at `bits` precision. The leading coefficient must be nonzero.
/// Without `initial`, the iteration first runs at a low precision from
/// points on a circle and is then refined at the target precision.
AberthResult aberth_roots(const std::vector<BigComplex>& coeffs, Bits bits,
                          std::vector<BigComplex> initial = {});

/// p(z) and p'(z) by Horner's scheme.
void horner_with_derivative(const std::vector<BigComplex>& coeffs, const BigComplex& z,
                            BigComplex& value, BigComplex& derivative);

} // namespace chebsys
