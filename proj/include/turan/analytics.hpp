#ifndef TURAN_ANALYTICS_HPP
#define TURAN_ANALYTICS_HPP

#include <optional>
#include <string_view>

#include "turan/gegenbauer.hpp"
#include "turan/params.hpp"
#include "turan/zeros.hpp"

namespace turan {

/// Turan determinant delta = p_n^2 - p_{n-1} p_{n+1}, the normalized Turan
/// function phi = delta / (1 - x^2) and its derivatives, together with the
/// auxiliary psi = x p'^2 - p p' - x p p'' and psi'.
///
/// phi' = 2 lambda / (n (n + 2 lambda)) * psi and
/// phi'' = 2 lambda / (n (n + 2 lambda)) * psi'.
struct TuranEval {
    double x = 0.0;
    double delta = 0.0;
    double phi = 0.0;
    double dphi = 0.0;
    double d2phi = 0.0;
    double psi = 0.0;
    double dpsi = 0.0;
};

/// delta from its definition, phi from the polynomial closed form
///     phi = [n(n+2l) p^2 - 2 l x p p' + (1 - x^2) p'^2] / (n (n + 2l)),
/// psi' from the quadratic form in (p', p'') divided by n(n+2l)(1-x^2).
/// At x = +-1, where that quotient is 0/0, psi' takes its limit
///     psi'(+-1) = p''(1) (p'(1) - 2) - p'''(1).
TuranEval turan_eval(const UltraParams& params, double x);

/// psi'(x) = x p' p'' - 2 p p'' - x p p''', by direct differentiation of psi.
/// Polynomial in x, so it is an independent route to TuranEval::dpsi.
double psi_prime_direct(const UltraParams& params, double x);

/// delta'' = -2 phi - 4 x phi' + (1 - x^2) phi''.
double delta_second_derivative(const TuranEval& t);

/// phi' from the zeros of p_n:
///     phi'(x) = 4 l x / (n (n + 2l)) * sum_k x_k^2 q_k(x)^2,  q_k = p_n(x) / (x^2 - x_k^2).
/// Within 1e-10 of a removable singularity q_k is replaced by its limit p_n'(+-x_k) / (2x).
double phi_prime_sumform(const UltraParams& params, double x, const ZeroSet& zs);

/// delta from the Hermite interpolation formula at the zeros,
///     delta(x) = (1 - x^2) / (n (n + 2l)) * sum_k l_k(x)^2 (1 - x_k x) p_n'(x_k)^2,
/// with the Lagrange basis l_k in barycentric form.
double hermite_representation(const UltraParams& params, double x, const ZeroSet& zs);

struct Discriminants {
    double D = 0.0;
    double D1 = 0.0;
};

/// Discriminant D of the psi' quadratic form and its reduced factor D1:
///     D  = (2l+1) x^2 [2l + 3 - (2l+1)(1-x^2)] D1
///     D1 = (2l+1) [2l + 3 - (2l+2)(1-x^2)]^2 / [2l + 3 - (2l+1)(1-x^2)] - 4 (n-1)(n+2l+1)(1-x^2)
Discriminants discriminants(const UltraParams& params, double x);

enum class BoundFamily {
    Basic,        ///< two-sided estimate through phi(0) and phi(1), |x| <= 1
    Corollary,    ///< sharpened estimate from convexity/concavity of phi
    Szasz,        ///< lower/upper pair valid for 0 < lambda < 1
    Refinement,   ///< |x| p_n^2 - p_{n-1} p_{n+1} >= 0 for -1/2 < lambda <= 1/2
};

std::string_view to_string(BoundFamily f);

/// Parses "basic15", "corollary12", "szasz" or "refinement".
BoundFamily parse_bound_family(std::string_view name);

struct BoundReport {
    BoundFamily family = BoundFamily::Basic;
    double x = 0.0;
    double value = 0.0;
    double lower = 0.0;
    std::optional<double> upper;
    double margin_low = 0.0;
    std::optional<double> margin_high;
};

/// Value and bounds of the chosen family at x. Throws DomainError when
/// lambda (or x) lies outside the family's range.
BoundReport bound_report(const UltraParams& params, double x, BoundFamily family);

} // namespace turan

#endif
