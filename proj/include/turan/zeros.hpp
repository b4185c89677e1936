#ifndef TURAN_ZEROS_HPP
#define TURAN_ZEROS_HPP

#include <vector>

#include "turan/params.hpp"

namespace turan {

/// The n real zeros of p_n, ascending, exactly antisymmetric
/// (zeros[k] == -zeros[n-1-k], middle zero 0 for odd n).
/// residuals[k] = |p_n(zeros[k])|.
struct ZeroSet {
    UltraParams params;
    std::vector<double> zeros;
    std::vector<double> residuals;

    double largest() const { return zeros.back(); }
};

/// Zeros of p_n: eigenvalues of the symmetrized Jacobi matrix, polished by
/// Newton steps on the recurrence and symmetrized.
ZeroSet zeros(const UltraParams& params);

/// Upper bound for the square of the largest zero,
///     ((n + l)^2 - (l + 1)^2) / ((n + l)^2 + 3 l + 5/4 + 3 (l + 1/2)^2 / (n - 1)).
/// Requires n >= 2.
double largest_zero_bound(const UltraParams& params);

/// Threshold the convexity argument needs the squared largest zero to stay below,
///     1 - (2 l + 1)(2 l + 3) / (4 (n + l)^2 - l - 3/2).
double proof_threshold(const UltraParams& params);

} // namespace turan

#endif
