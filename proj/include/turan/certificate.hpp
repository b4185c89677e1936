#ifndef TURAN_CERTIFICATE_HPP
#define TURAN_CERTIFICATE_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "turan/mpoly.hpp"

namespace turan {

/// Range of one variable: [lo, hi], [lo, inf), with optionally open ends.
struct Axis {
    std::string name;
    Rational lo;
    std::optional<Rational> hi;
    bool lo_open = false;
    bool hi_open = false;

    bool bounded() const noexcept { return hi.has_value(); }
    bool contains(const Rational& v) const;
    friend bool operator==(const Axis&, const Axis&) = default;
};

/// One axis per polynomial variable, in the polynomial's variable order.
using Region = std::vector<Axis>;

std::string to_string(const Axis& a);

enum class Claim { NonNegative, Positive };
enum class Verdict { Proved, Refuted, Inconclusive };

/// Expansion used on one axis of a leaf box:
///  Bernstein  bounded [lo, hi], x = lo + (hi - lo) t, Bernstein basis in t on [0, 1];
///  Shift      [lo, inf), x = lo + w, monomials w^j with w >= 0;
///  Inverted   [lo, inf) with lo > 0, x = lo / u, the polynomial multiplied by
///             u^deg and expanded in the Bernstein basis in u on [0, 1].
enum class LeafBasis { Bernstein, Shift, Inverted };

std::string_view to_string(Claim c);
std::string_view to_string(Verdict v);
std::string_view to_string(LeafBasis b);

/// Subdivision tree. A closed leaf carries the full coefficient tensor of
/// the (reduced) target polynomial in its leaf basis; an open leaf is a box
/// the search could not decide.
struct EvidenceNode {
    enum class Kind { Leaf, Split, Open };

    Kind kind = Kind::Open;
    Region box;  // closed box; open flags are not used here

    std::vector<LeafBasis> basis;
    CoefficientTensor tensor;

    std::size_t split_axis = 0;
    Rational split_at;
    std::vector<EvidenceNode> children;
};

/// Positivity certificate for `polynomial` over `region`.
///
/// polynomial = x^factor * reduced, where every factored variable is >= 0
/// (> 0 for a Positive claim) on the region; the evidence tree certifies
/// `reduced` on the closure of the region. A Refuted certificate carries a
/// witness point at which `polynomial` violates the claim.
struct Certificate {
    std::string target;
    std::vector<std::string> notes;
    Claim claim = Claim::NonNegative;
    MPoly polynomial;
    Region region;
    Exponents factor;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<Rational> witness;
    std::optional<EvidenceNode> evidence;
    std::vector<Region> uncovered;
    std::vector<Certificate> side_conditions;
};

struct CertifyOptions {
    int max_depth = 30;          // subdivisions per axis along any path
    std::size_t max_nodes = 100000;
};

/// Searches for a coefficient-sign certificate, subdividing on failure.
Certificate certify(std::string target, const MPoly& polynomial, const Region& region, Claim claim,
                    const CertifyOptions& options = {});

/// Expands `p` in the leaf basis of `box`; the result is over the same
/// variable names, reinterpreted as the local coordinates t, w or u.
MPoly to_leaf_coordinates(const MPoly& p, const Region& box, const std::vector<LeafBasis>& basis);

struct CheckResult {
    bool ok = false;
    std::string reason;
};

/// Re-verifies a certificate without searching: monomial factor identity,
/// subdivision coverage, every leaf coefficient tensor (by re-expanding the
/// basis and comparing with the substituted polynomial) and its signs, and
/// the witness of a refutation. Side conditions are checked recursively.
CheckResult check_certificate(const Certificate& c);

/// Text form of a certificate; stable across runs.
void write_certificate(std::ostream& os, const Certificate& c);
std::string write_certificate(const Certificate& c);
Certificate read_certificate(std::istream& is);

/// With t = 1 - x^2:
///   (2l + 3 - (2l + 5/2) t)(2l + 3 - (2l + 1) t) - (2l + 3 - (2l + 2) t)^2,
/// over variables (lambda, t).
MPoly ratio_inequality_difference();

/// The difference above is >= 0 for lambda >= -1/2, t in [0, 1], certified
/// in s = lambda + 1/2; side condition: the denominator 2l + 3 - (2l + 1) t > 0.
Certificate certify_ratio_inequality(const CertifyOptions& options = {});

/// Numerators and denominators of the two right-hand sides over (n, lambda):
///   threshold = 1 - (2l+1)(2l+3) / (4(n+l)^2 - l - 3/2)
///   bound     = ((n+l)^2 - (l+1)^2)(n-1) / (((n+l)^2 + 3l + 5/4)(n-1) + 3(l+1/2)^2)
/// and difference = threshold_num * bound_den - bound_num * threshold_den.
struct BoundComparisonForms {
    MPoly threshold_num;
    MPoly threshold_den;
    MPoly bound_num;
    MPoly bound_den;
    MPoly difference;
};

BoundComparisonForms bound_comparison_forms();

/// threshold - bound > 0 for real n >= 2 and lambda > -1/2 (lambda <= cap when
/// given), certified in m = n - 2, s = lambda + 1/2 on the cleared difference;
/// side conditions: both denominators positive on the same region.
Certificate certify_bound_comparison(const CertifyOptions& options = {},
                                     std::optional<Rational> lambda_cap = std::nullopt);

} // namespace turan

#endif
