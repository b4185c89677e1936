#include "turan/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "turan/gegenbauer.hpp"

namespace turan {

namespace {

constexpr int kMaxNewtonIterations = 20;

// Off-diagonal of the symmetric Jacobi matrix. Writing the normalized
// recurrence as x p_k = a_k p_{k+1} + c_k p_{k-1} with
//     a_k = (k + 2l) / (2 (k + l)),  c_k = k / (2 (k + l)),  a_0 = 1,
// the similarity transform to symmetric form has b_k = sqrt(a_{k-1} c_k).
double jacobi_offdiag(double lambda, int k)
{
    const double a_prev = (k == 1) ? 1.0 : (k - 1 + 2.0 * lambda) / (2.0 * (k - 1 + lambda));
    const double c = k / (2.0 * (k + lambda));
    return std::sqrt(a_prev * c);
}

// p_n and p_n' in extended precision, so the polished zero rounds to the
// nearest double instead of stalling where the double residual hits 0.
std::pair<long double, long double> value_and_slope(long double l, int n, long double x)
{
    long double prev = 1.0L, cur = x, dprev = 0.0L, dcur = 1.0L;
    for (int k = 1; k < n; ++k) {
        const long double next = (2.0L * (k + l) * x * cur - k * prev) / (k + 2.0L * l);
        const long double dnext = (2.0L * (k + l) * (cur + x * dcur) - k * dprev) / (k + 2.0L * l);
        prev = cur;
        cur = next;
        dprev = dcur;
        dcur = dnext;
    }
    return {cur, dcur};
}

double newton_polish(const UltraParams& params, double x0)
{
    long double x = x0;
    for (int it = 0; it < kMaxNewtonIterations; ++it) {
        const auto [p, dp] = value_and_slope(params.lambda(), params.n(), x);
        if (dp == 0.0L) {
            break;
        }
        const long double step = p / dp;
        x -= step;
        if (std::abs(step) <= std::numeric_limits<long double>::epsilon() * std::max(std::abs(x), 1e-300L)) {
            break;
        }
    }
    return static_cast<double>(x);
}

} // namespace

ZeroSet zeros(const UltraParams& params)
{
    const int n = params.n();
    std::vector<double> roots(static_cast<std::size_t>(n), 0.0);

    if (n > 1) {
        Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
        Eigen::VectorXd sub(n - 1);
        for (int k = 1; k < n; ++k) {
            sub(k - 1) = jacobi_offdiag(params.lambda(), k);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
        solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) {
            throw NumericError("tridiagonal eigensolver did not converge for lambda=" +
                               std::to_string(params.lambda()) + ", n=" + std::to_string(n));
        }
        for (int k = 0; k < n; ++k) {
            roots[static_cast<std::size_t>(k)] = newton_polish(params, solver.eigenvalues()(k));
        }
        std::sort(roots.begin(), roots.end());
    }

    // Antisymmetrize pairs; the middle zero of an odd-degree polynomial is 0.
    for (int k = 0; k < n / 2; ++k) {
        const auto lo = static_cast<std::size_t>(k);
        const auto hi = static_cast<std::size_t>(n - 1 - k);
        const double z = 0.5 * (roots[hi] - roots[lo]);
        roots[lo] = -z;
        roots[hi] = z;
    }
    if (n % 2 == 1) {
        roots[static_cast<std::size_t>(n / 2)] = 0.0;
    }

    ZeroSet zs{params, std::move(roots), {}};
    zs.residuals.reserve(zs.zeros.size());
    for (double z : zs.zeros) {
        zs.residuals.push_back(std::abs(eval(params, z).p));
    }
    return zs;
}

double largest_zero_bound(const UltraParams& params)
{
    if (params.n() < 2) {
        throw DomainError("largest_zero_bound requires n >= 2");
    }
    const double l = params.lambda();
    const double n = params.n();
    const double s = (n + l) * (n + l);
    return (s - (l + 1.0) * (l + 1.0)) / (s + 3.0 * l + 1.25 + 3.0 * (l + 0.5) * (l + 0.5) / (n - 1.0));
}

double proof_threshold(const UltraParams& params)
{
    const double l = params.lambda();
    const double n = params.n();
    const double den = 4.0 * (n + l) * (n + l) - l - 1.5;
    if (!(den > 0.0)) {
        throw DomainError("proof_threshold: 4(n+lambda)^2 - lambda - 3/2 must be positive");
    }
    return 1.0 - (2.0 * l + 1.0) * (2.0 * l + 3.0) / den;
}

} // namespace turan
