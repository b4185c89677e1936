#ifndef TURAN_GEGENBAUER_HPP
#define TURAN_GEGENBAUER_HPP

#include "turan/params.hpp"

namespace turan {

/// Values of the normalized ultraspherical polynomials at a point:
/// p_{n-1}, p_n, p_{n+1} and the first two derivatives of p_n.
struct PolyEval {
    double x = 0.0;
    double p_prev = 0.0;
    double p = 0.0;
    double p_next = 0.0;
    double dp = 0.0;
    double d2p = 0.0;
};

/// Evaluates p_{n-1}, p_n, p_{n+1}, p_n' and p_n'' at x with the normalized
/// three-term recurrence
///     (k + 2 lambda) p_{k+1} = 2 (k + lambda) x p_k - k p_{k-1},  p_0 = 1, p_1 = x,
/// differentiated term by term for the derivatives. Any real x is accepted.
PolyEval eval(const UltraParams& params, double x);

/// p_n'''(x), propagated through the same recurrence as eval().
double third_derivative(const UltraParams& params, double x);

/// k-th derivative of p_n at x = 1 from the closed form
///     p^(j+1)(1) = p^(j)(1) (n - j)(n + 2 lambda + j) / (2 lambda + 2 j + 1).
double derivative_at_one(const UltraParams& params, int order);

/// Unnormalized value P_n^(lambda)(1) = binom(n + 2 lambda - 1, n).
/// Rejects lambda = 0, where the unnormalized family degenerates.
double unnormalized_value_at_one(const UltraParams& params);

struct NeighborValues {
    double p_next = 0.0;
    double p_prev = 0.0;
};

/// p_{n+1} and p_{n-1} from p_n and p_n' alone:
///     p_{n+1} = x p_n - (1 - x^2) p_n' / (n + 2 lambda)
///     p_{n-1} = x p_n + (1 - x^2) p_n' / n
NeighborValues neighbors_from_center(const UltraParams& params, double x, double p, double dp);

/// Residuals of the second-order equation
///     (1 - x^2) y'' - (2 lambda + 1) x y' + n (n + 2 lambda) y = 0
/// and of its derivative
///     (1 - x^2) y''' - (2 lambda + 3) x y'' + (n - 1)(n + 2 lambda + 1) y' = 0.
/// y''' is recurrence-propagated (see third_derivative()). scale2/scale3 hold the
/// largest absolute term of each equation, for relative comparisons.
struct OdeResiduals {
    double r2 = 0.0;
    double r3 = 0.0;
    double scale2 = 0.0;
    double scale3 = 0.0;
};

OdeResiduals ode_residuals(const UltraParams& params, const PolyEval& e);

} // namespace turan

#endif
