#include "turan/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace turan {

namespace {

constexpr double kSingularityGuard = 1e-10;

void require_matching(const UltraParams& params, const ZeroSet& zs, const char* op)
{
    if (!(zs.params == params) || zs.zeros.size() != static_cast<std::size_t>(params.n())) {
        throw ConsistencyError(std::string(op) + ": zero set does not belong to these parameters");
    }
}

// psi' from the quadratic form in (p', p''):
//   n(n+2l)(1-x^2) psi' = (2l+1)(n-1)(n+2l+1) x^2 p'^2
//                         - (2l+1) x [1 + 2(l+1) x^2] p' p''
//                         + (1-x^2) [2 + (2l+1) x^2] p''^2
double psi_prime_quadratic_form(const UltraParams& params, const PolyEval& e)
{
    const double l = params.lambda();
    const double n = params.n();
    const double x = e.x;
    const double x2 = x * x;
    const double w = (1.0 - x) * (1.0 + x);
    const double q = (2.0 * l + 1.0) * (n - 1.0) * (n + 2.0 * l + 1.0) * x2 * e.dp * e.dp
                     - (2.0 * l + 1.0) * x * (1.0 + 2.0 * (l + 1.0) * x2) * e.dp * e.d2p
                     + w * (2.0 + (2.0 * l + 1.0) * x2) * e.d2p * e.d2p;
    return q / (params.eigen() * w);
}

double psi_prime_at_one(const UltraParams& params)
{
    const double d1 = derivative_at_one(params, 1);
    const double d2 = derivative_at_one(params, 2);
    const double d3 = derivative_at_one(params, 3);
    return d2 * (d1 - 2.0) - d3;
}

} // namespace

TuranEval turan_eval(const UltraParams& params, double x)
{
    const double l = params.lambda();
    const double nn = params.eigen();
    const PolyEval e = eval(params, x);
    const double w = (1.0 - x) * (1.0 + x);

    TuranEval t;
    t.x = x;
    t.delta = e.p * e.p - e.p_prev * e.p_next;
    // For lambda = 0 the closed form is T_n^2 + (1 - x^2) T_n'^2 / n^2 = 1, which
    // cancels catastrophically once |x| > 1.
    t.phi = (l == 0.0) ? 1.0 : (nn * e.p * e.p - 2.0 * l * x * e.p * e.dp + w * e.dp * e.dp) / nn;
    t.psi = x * e.dp * e.dp - e.p * e.dp - x * e.p * e.d2p;
    t.dpsi = (std::abs(x) == 1.0) ? psi_prime_at_one(params) : psi_prime_quadratic_form(params, e);

    const double c = 2.0 * l / nn;
    t.dphi = c * t.psi;
    t.d2phi = c * t.dpsi;
    return t;
}

double psi_prime_direct(const UltraParams& params, double x)
{
    const PolyEval e = eval(params, x);
    const double d3p = third_derivative(params, x);
    return x * e.dp * e.d2p - 2.0 * e.p * e.d2p - x * e.p * d3p;
}

double delta_second_derivative(const TuranEval& t)
{
    const double x = t.x;
    return -2.0 * t.phi - 4.0 * x * t.dphi + (1.0 - x) * (1.0 + x) * t.d2phi;
}

double phi_prime_sumform(const UltraParams& params, double x, const ZeroSet& zs)
{
    require_matching(params, zs, "phi_prime_sumform");
    const double p = eval(params, x).p;
    double sum = 0.0;
    for (double xk : zs.zeros) {
        if (xk == 0.0) {
            continue;
        }
        const double gap = x * x - xk * xk;
        double q = 0.0;
        if (std::abs(gap) < kSingularityGuard) {
            const double nearest = (std::abs(x - xk) <= std::abs(x + xk)) ? xk : -xk;
            q = eval(params, nearest).dp / (2.0 * x);
        } else {
            q = p / gap;
        }
        sum += xk * xk * q * q;
    }
    return 4.0 * params.lambda() * x / params.eigen() * sum;
}

double hermite_representation(const UltraParams& params, double x, const ZeroSet& zs)
{
    require_matching(params, zs, "hermite_representation");
    const std::size_t n = zs.zeros.size();

    // Barycentric weights w_k = 1 / prod_{j != k} (x_k - x_j) and
    // l_k(x) = (w_k / (x - x_k)) / sum_j (w_j / (x - x_j)).
    std::vector<double> weights(n, 1.0);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j != k) {
                weights[k] *= zs.zeros[k] - zs.zeros[j];
            }
        }
        weights[k] = 1.0 / weights[k];
    }

    std::vector<double> basis(n, 0.0);
    const auto hit = std::find(zs.zeros.begin(), zs.zeros.end(), x);
    if (hit != zs.zeros.end()) {
        basis[static_cast<std::size_t>(hit - zs.zeros.begin())] = 1.0;
    } else {
        double denom = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            basis[k] = weights[k] / (x - zs.zeros[k]);
            denom += basis[k];
        }
        for (double& b : basis) {
            b /= denom;
        }
    }

    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double xk = zs.zeros[k];
        const double dp = eval(params, xk).dp;
        sum += basis[k] * basis[k] * (1.0 - xk * x) * dp * dp;
    }
    return (1.0 - x) * (1.0 + x) / params.eigen() * sum;
}

Discriminants discriminants(const UltraParams& params, double x)
{
    const double l = params.lambda();
    const double n = params.n();
    const double w = (1.0 - x) * (1.0 + x);
    const double denom = 2.0 * l + 3.0 - (2.0 * l + 1.0) * w;
    if (!(denom > 0.0)) {
        throw DomainError("discriminants: 2l + 3 - (2l + 1)(1 - x^2) must be positive");
    }
    const double num = 2.0 * l + 3.0 - (2.0 * l + 2.0) * w;
    Discriminants d;
    d.D1 = (2.0 * l + 1.0) * num * num / denom - 4.0 * (n - 1.0) * (n + 2.0 * l + 1.0) * w;
    d.D = (2.0 * l + 1.0) * x * x * denom * d.D1;
    return d;
}

std::string_view to_string(BoundFamily f)
{
    switch (f) {
    case BoundFamily::Basic:
        return "basic15";
    case BoundFamily::Corollary:
        return "corollary12";
    case BoundFamily::Szasz:
        return "szasz";
    case BoundFamily::Refinement:
        return "refinement";
    }
    return "unknown";
}

BoundFamily parse_bound_family(std::string_view name)
{
    for (auto f : {BoundFamily::Basic, BoundFamily::Corollary, BoundFamily::Szasz, BoundFamily::Refinement}) {
        if (name == to_string(f)) {
            return f;
        }
    }
    throw DomainError("unknown bound family '" + std::string(name) +
                      "' (expected basic15, corollary12, szasz or refinement)");
}

BoundReport bound_report(const UltraParams& params, double x, BoundFamily family)
{
    const double l = params.lambda();
    const double n = params.n();
    const double w = (1.0 - x) * (1.0 + x);
    const std::string name(to_string(family));

    BoundReport r;
    r.family = family;
    r.x = x;

    switch (family) {
    case BoundFamily::Basic:
    case BoundFamily::Corollary: {
        if (l == 0.0) {
            throw DomainError(name + " requires lambda in (-1/2, 0) or lambda > 0");
        }
        if (family == BoundFamily::Basic && std::abs(x) > 1.0) {
            throw DomainError(name + " is stated for |x| <= 1");
        }
        r.value = turan_eval(params, x).delta;
        const double at_zero = turan_eval(params, 0.0).delta;
        const double at_one = 1.0 / (2.0 * l + 1.0);
        const double through_zero = at_zero * w;
        const double other = (family == BoundFamily::Basic)
                                 ? at_one * w
                                 : ((1.0 - std::abs(x)) * at_zero + std::abs(x) * at_one) * w;
        // phi is concave for lambda < 0, so phi(0) bounds from above.
        if (l < 0.0) {
            r.lower = other;
            r.upper = through_zero;
        } else {
            r.lower = through_zero;
            r.upper = other;
        }
        break;
    }
    case BoundFamily::Szasz: {
        if (!(l > 0.0 && l < 1.0)) {
            throw DomainError(name + " requires 0 < lambda < 1");
        }
        const PolyEval e = eval(params, x);
        r.value = e.p * e.p - e.p_prev * e.p_next;
        r.lower = l * (1.0 - e.p * e.p) / ((n + l - 1.0) * (n + 2.0 * l));
        r.upper = (n + l) / (l + 1.0) *
                  std::exp(std::lgamma(n) + std::lgamma(2.0 * l + 1.0) - std::lgamma(n + 2.0 * l + 1.0));
        break;
    }
    case BoundFamily::Refinement: {
        if (!(l <= 0.5)) {
            throw DomainError(name + " requires -1/2 < lambda <= 1/2");
        }
        if (std::abs(x) > 1.0) {
            throw DomainError(name + " is stated for |x| <= 1");
        }
        const PolyEval e = eval(params, x);
        r.value = std::abs(x) * e.p * e.p - e.p_prev * e.p_next;
        r.lower = 0.0;
        break;
    }
    }

    r.margin_low = r.value - r.lower;
    if (r.upper) {
        r.margin_high = *r.upper - r.value;
    }
    return r;
}

} // namespace turan
