#include "turan/gegenbauer.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace turan {

namespace {

// Value and derivatives up to Order of p_k, p_{k-1} and p_{k+1} after running
// the recurrence to k = n.
template <int Order>
struct RecurrenceState {
    std::array<double, Order + 1> prev{};
    std::array<double, Order + 1> cur{};
    std::array<double, Order + 1> next{};
};

template <int Order>
RecurrenceState<Order> run_recurrence(const UltraParams& params, double x)
{
    const double lambda = params.lambda();
    const int n = params.n();

    // d^j/dx^j of p_0 = 1 and p_1 = x.
    std::array<double, Order + 1> pm{};
    std::array<double, Order + 1> pk{};
    pm[0] = 1.0;
    pk[0] = x;
    if constexpr (Order >= 1) {
        pk[1] = 1.0;
    }

    RecurrenceState<Order> state;
    for (int k = 1; k <= n; ++k) {
        // (k + 2l) p_{k+1}^(j) = 2 (k + l) (x p_k^(j) + j p_k^(j-1)) - k p_{k-1}^(j)
        const double a = 2.0 * (k + lambda);
        const double inv = 1.0 / (k + 2.0 * lambda);
        std::array<double, Order + 1> pn{};
        for (int j = 0; j <= Order; ++j) {
            double t = x * pk[j];
            if (j > 0) {
                t += j * pk[j - 1];
            }
            pn[j] = (a * t - k * pm[j]) * inv;
        }
        if (k == n) {
            state.prev = pm;
            state.cur = pk;
            state.next = pn;
        }
        pm = pk;
        pk = pn;
    }
    return state;
}

} // namespace

PolyEval eval(const UltraParams& params, double x)
{
    const auto s = run_recurrence<2>(params, x);
    PolyEval e;
    e.x = x;
    e.p_prev = s.prev[0];
    e.p = s.cur[0];
    e.p_next = s.next[0];
    e.dp = s.cur[1];
    e.d2p = s.cur[2];
    return e;
}

double third_derivative(const UltraParams& params, double x)
{
    return run_recurrence<3>(params, x).cur[3];
}

double derivative_at_one(const UltraParams& params, int order)
{
    if (order < 0) {
        throw DomainError("derivative order must be non-negative");
    }
    const double lambda = params.lambda();
    const int n = params.n();
    double v = 1.0;
    for (int j = 0; j < order; ++j) {
        v *= (n - j) * (n + 2.0 * lambda + j) / (2.0 * lambda + 2.0 * j + 1.0);
    }
    return v;
}

double unnormalized_value_at_one(const UltraParams& params)
{
    if (params.lambda() == 0.0) {
        throw DomainError("P_n^(0)(1) is degenerate; only the normalized family exists at lambda = 0");
    }
    // binom(n + 2l - 1, n) = prod_{k=0}^{n-1} (2l + k) / (k + 1)
    double v = 1.0;
    for (int k = 0; k < params.n(); ++k) {
        v *= (2.0 * params.lambda() + k) / (k + 1.0);
    }
    return v;
}

NeighborValues neighbors_from_center(const UltraParams& params, double x, double p, double dp)
{
    const double w = (1.0 - x) * (1.0 + x);
    const double n = params.n();
    return {x * p - w * dp / (n + 2.0 * params.lambda()), x * p + w * dp / n};
}

OdeResiduals ode_residuals(const UltraParams& params, const PolyEval& e)
{
    const double lambda = params.lambda();
    const double n = params.n();
    const double x = e.x;
    const double w = (1.0 - x) * (1.0 + x);
    const double d3p = third_derivative(params, x);

    const std::array<double, 3> t2{w * e.d2p, -(2.0 * lambda + 1.0) * x * e.dp, n * (n + 2.0 * lambda) * e.p};
    const std::array<double, 3> t3{w * d3p, -(2.0 * lambda + 3.0) * x * e.d2p,
                                   (n - 1.0) * (n + 2.0 * lambda + 1.0) * e.dp};

    auto max_abs = [](const std::array<double, 3>& t) {
        return std::max({std::abs(t[0]), std::abs(t[1]), std::abs(t[2])});
    };

    OdeResiduals r;
    r.r2 = t2[0] + t2[1] + t2[2];
    r.r3 = t3[0] + t3[1] + t3[2];
    r.scale2 = max_abs(t2);
    r.scale3 = max_abs(t3);
    return r;
}

} // namespace turan
