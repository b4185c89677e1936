#include "turan/certificate.hpp"

#include <algorithm>
#include <stdexcept>

#include "turan/params.hpp"

namespace turan {

bool Axis::contains(const Rational& v) const
{
    if (v < lo || (lo_open && v == lo)) {
        return false;
    }
    if (hi && (v > *hi || (hi_open && v == *hi))) {
        return false;
    }
    return true;
}

std::string to_string(const Axis& a)
{
    std::string s = a.name + " in ";
    s += a.lo_open ? '(' : '[';
    s += to_string(a.lo) + ",";
    if (a.hi) {
        s += to_string(*a.hi);
        s += a.hi_open ? ')' : ']';
    } else {
        s += "inf)";
    }
    return s;
}

std::string_view to_string(Claim c)
{
    return c == Claim::Positive ? "positive" : "nonnegative";
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Proved:
        return "proved";
    case Verdict::Refuted:
        return "refuted";
    case Verdict::Inconclusive:
        return "inconclusive";
    }
    return "unknown";
}

std::string_view to_string(LeafBasis b)
{
    switch (b) {
    case LeafBasis::Bernstein:
        return "bernstein";
    case LeafBasis::Shift:
        return "shift";
    case LeafBasis::Inverted:
        return "inverted";
    }
    return "unknown";
}

MPoly to_leaf_coordinates(const MPoly& p, const Region& box, const std::vector<LeafBasis>& basis)
{
    MPoly q = p;
    for (std::size_t i = 0; i < box.size(); ++i) {
        const Axis& a = box[i];
        switch (basis[i]) {
        case LeafBasis::Bernstein:
            q = q.shift(i, a.lo).scale(i, *a.hi - a.lo);
            break;
        case LeafBasis::Shift:
            q = q.shift(i, a.lo);
            break;
        case LeafBasis::Inverted: {
            // u^d p(lo / u): the term c x^k becomes c lo^k u^(d - k).
            const unsigned d = q.degree(i);
            MPoly r(q.variables());
            for (const auto& [e, c] : q.terms()) {
                Exponents ne = e;
                ne[i] = d - e[i];
                Rational f = c;
                for (unsigned k = 0; k < e[i]; ++k) {
                    f *= a.lo;
                }
                r.add_term(ne, f);
            }
            q = std::move(r);
            break;
        }
        }
    }
    return q;
}

namespace {

std::vector<AxisBasis> tensor_basis(const std::vector<LeafBasis>& basis)
{
    std::vector<AxisBasis> out;
    for (auto b : basis) {
        out.push_back(b == LeafBasis::Shift ? AxisBasis::Monomial : AxisBasis::Bernstein);
    }
    return out;
}

bool signs_certify(const CoefficientTensor& t, const std::vector<LeafBasis>& basis, Claim claim)
{
    for (std::size_t flat = 0; flat < t.coefficients.size(); ++flat) {
        const Rational& c = t.coefficients[flat];
        if (c < 0) {
            return false;
        }
        if (claim == Claim::Positive && c == 0) {
            const auto idx = t.multi_index(flat);
            bool base_term = true;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (basis[i] == LeafBasis::Shift && idx[i] != 0) {
                    base_term = false;
                }
            }
            if (base_term) {
                return false;
            }
        }
    }
    return true;
}

bool violates(const Rational& v, Claim claim)
{
    return claim == Claim::Positive ? v <= 0 : v < 0;
}

class Search {
public:
    Search(const MPoly& original, const MPoly& reduced, const Region& region, Claim claim,
           const CertifyOptions& options)
        : original_(original), reduced_(reduced), region_(region), claim_(claim), options_(options)
    {
    }

    EvidenceNode explore(const Region& box, std::vector<int> depth)
    {
        EvidenceNode node;
        node.box = box;
        ++nodes_;

        if (try_leaf(node)) {
            return node;
        }
        if (find_witness(box)) {
            return node;  // the caller discards the tree
        }
        if (nodes_ >= options_.max_nodes) {
            uncovered_.push_back(box);
            return node;
        }

        const auto axis = pick_axis(box, depth);
        if (!axis) {
            uncovered_.push_back(box);
            return node;
        }

        const Axis& a = box[*axis];
        Rational at;
        if (a.bounded()) {
            at = (a.lo + *a.hi) / 2;
        } else {
            // [lo, inf) -> [lo, c] and [c, inf); the tail can then use u = c / x.
            at = a.lo > 0 ? Rational(2 * a.lo) : std::max(Rational(a.lo + 1), Rational(1));
        }
        Region left = box;
        Region right = box;
        left[*axis].hi = at;
        right[*axis].lo = at;

        node.kind = EvidenceNode::Kind::Split;
        node.split_axis = *axis;
        node.split_at = at;
        ++depth[*axis];
        node.children.push_back(explore(left, depth));
        if (witness_) {
            return node;
        }
        node.children.push_back(explore(right, depth));
        return node;
    }

    const std::optional<std::vector<Rational>>& witness() const { return witness_; }
    const std::vector<Region>& uncovered() const { return uncovered_; }

private:
    bool try_leaf(EvidenceNode& node)
    {
        std::vector<std::size_t> tails;
        for (std::size_t i = 0; i < node.box.size(); ++i) {
            if (!node.box[i].bounded()) {
                tails.push_back(i);
            }
        }
        // Every combination of Shift / Inverted on the unbounded axes.
        for (unsigned mask = 0; mask < (1U << tails.size()); ++mask) {
            std::vector<LeafBasis> basis(node.box.size(), LeafBasis::Bernstein);
            bool usable = true;
            for (std::size_t k = 0; k < tails.size(); ++k) {
                const bool invert = (mask >> k) & 1U;
                if (invert && !(node.box[tails[k]].lo > 0)) {
                    usable = false;
                }
                basis[tails[k]] = invert ? LeafBasis::Inverted : LeafBasis::Shift;
            }
            if (!usable) {
                continue;
            }
            const MPoly local = to_leaf_coordinates(reduced_, node.box, basis);
            CoefficientTensor t = tensor_coefficients(local, tensor_basis(basis));
            if (signs_certify(t, basis, claim_)) {
                node.kind = EvidenceNode::Kind::Leaf;
                node.basis = std::move(basis);
                node.tensor = std::move(t);
                return true;
            }
        }
        return false;
    }

    bool find_witness(const Region& box)
    {
        std::vector<std::vector<Rational>> samples;
        for (std::size_t i = 0; i < box.size(); ++i) {
            const Axis& a = box[i];
            std::vector<Rational> v;
            if (a.bounded()) {
                v = {a.lo, (a.lo + *a.hi) / 2, *a.hi};
            } else {
                v = {a.lo, a.lo + 1, a.lo + 100};
            }
            std::erase_if(v, [&](const Rational& r) { return !region_[i].contains(r); });
            samples.push_back(std::move(v));
        }
        std::vector<std::size_t> idx(box.size(), 0);
        std::vector<Rational> point(box.size());
        for (;;) {
            for (std::size_t i = 0; i < box.size(); ++i) {
                if (samples[i].empty()) {
                    return false;
                }
                point[i] = samples[i][idx[i]];
            }
            if (violates(original_.evaluate(point), claim_)) {
                witness_ = point;
                return true;
            }
            std::size_t i = 0;
            while (i < idx.size() && ++idx[i] == samples[i].size()) {
                idx[i++] = 0;
            }
            if (i == idx.size()) {
                return false;
            }
        }
    }

    std::optional<std::size_t> pick_axis(const Region& box, const std::vector<int>& depth) const
    {
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < box.size(); ++i) {
            if (depth[i] >= options_.max_depth) {
                continue;
            }
            if (!box[i].bounded()) {
                return i;
            }
            if (!best || depth[i] < depth[*best]) {
                best = i;
            }
        }
        return best;
    }

    const MPoly& original_;
    const MPoly& reduced_;
    const Region& region_;
    Claim claim_;
    CertifyOptions options_;
    std::size_t nodes_ = 0;
    std::optional<std::vector<Rational>> witness_;
    std::vector<Region> uncovered_;
};

Region closure(Region r)
{
    for (auto& a : r) {
        a.lo_open = false;
        a.hi_open = false;
    }
    return r;
}

MPoly renamed(const MPoly& p, std::vector<std::string> names)
{
    MPoly r(std::move(names));
    for (const auto& [e, c] : p.terms()) {
        r.add_term(e, c);
    }
    return r;
}

Verdict combine(const Certificate& c)
{
    if (c.verdict != Verdict::Proved) {
        return c.verdict;
    }
    for (const auto& side : c.side_conditions) {
        if (side.verdict != Verdict::Proved) {
            return Verdict::Inconclusive;
        }
    }
    return Verdict::Proved;
}

} // namespace

Certificate certify(std::string target, const MPoly& polynomial, const Region& region, Claim claim,
                    const CertifyOptions& options)
{
    if (region.size() != polynomial.arity()) {
        throw DomainError("certify: region needs one axis per variable");
    }
    for (std::size_t i = 0; i < region.size(); ++i) {
        if (region[i].name != polynomial.variables()[i]) {
            throw DomainError("certify: region axis '" + region[i].name + "' does not match variable '" +
                              polynomial.variables()[i] + "'");
        }
        if (region[i].hi && !(region[i].lo < *region[i].hi)) {
            throw DomainError("certify: empty or degenerate range for '" + region[i].name + "'");
        }
    }
    if (options.max_depth < 1) {
        throw DomainError("certify: max_depth must be at least 1");
    }

    Certificate c;
    c.target = std::move(target);
    c.claim = claim;
    c.polynomial = polynomial;
    c.region = region;

    // Pull out x^k for variables that stay >= 0 (> 0 for a strict claim).
    c.factor = polynomial.monomial_content();
    for (std::size_t i = 0; i < region.size(); ++i) {
        const Axis& a = region[i];
        const bool allowed = a.lo > 0 || (a.lo == 0 && (claim == Claim::NonNegative || a.lo_open));
        if (!allowed) {
            c.factor[i] = 0;
        }
    }
    const MPoly reduced = *polynomial.divide_by_monomial(c.factor);

    Search search(polynomial, reduced, region, claim, options);
    EvidenceNode root = search.explore(closure(region), std::vector<int>(region.size(), 0));

    if (search.witness()) {
        c.verdict = Verdict::Refuted;
        c.witness = *search.witness();
    } else {
        c.evidence = std::move(root);
        c.uncovered = search.uncovered();
        c.verdict = c.uncovered.empty() ? Verdict::Proved : Verdict::Inconclusive;
    }
    return c;
}

MPoly ratio_inequality_difference()
{
    const std::vector<std::string> vars{"lambda", "t"};
    const MPoly l = MPoly::variable(vars, "lambda");
    const MPoly t = MPoly::variable(vars, "t");
    auto k = [&](const Rational& c) { return MPoly::constant(vars, c); };

    const MPoly a = 2 * l + k(3);
    const MPoly lhs = (a - (2 * l + k(Rational(5, 2))) * t) * (a - (2 * l + k(1)) * t);
    const MPoly sq = (a - (2 * l + k(2)) * t).pow(2);
    return lhs - sq;
}

Certificate certify_ratio_inequality(const CertifyOptions& options)
{
    const std::vector<std::string> lt{"lambda", "t"};
    const MPoly l = MPoly::variable(lt, "lambda");
    const MPoly t = MPoly::variable(lt, "t");
    const MPoly shift = l - MPoly::constant(lt, Rational(1, 2));  // lambda = s - 1/2

    const std::vector<std::string> st{"s", "t"};
    const MPoly diff = renamed(ratio_inequality_difference().compose(0, shift), st);
    const MPoly den = renamed(
        (2 * l + MPoly::constant(lt, 3) - (2 * l + MPoly::constant(lt, 1)) * t).compose(0, shift), st);

    const Region region{Axis{"s", 0, std::nullopt}, Axis{"t", 0, Rational(1)}};

    Certificate c = certify("ratio_inequality", diff, region, Claim::NonNegative, options);
    c.notes = {"lambda = s - 1/2, t = 1 - x^2",
               "(2l+3-(2l+2)t)^2 / (2l+3-(2l+1)t) <= 2l+3-(2l+5/2)t  <=>  polynomial >= 0 given denominator > 0"};
    c.side_conditions.push_back(certify("ratio_denominator", den, region, Claim::Positive, options));
    c.side_conditions.back().notes = {"2l+3-(2l+1)t with lambda = s - 1/2"};
    c.verdict = combine(c);
    return c;
}

BoundComparisonForms bound_comparison_forms()
{
    const std::vector<std::string> vars{"n", "lambda"};
    const MPoly n = MPoly::variable(vars, "n");
    const MPoly l = MPoly::variable(vars, "lambda");
    auto k = [&](const Rational& c) { return MPoly::constant(vars, c); };

    const MPoly nl2 = (n + l).pow(2);
    BoundComparisonForms f;
    f.threshold_den = 4 * nl2 - l - k(Rational(3, 2));
    f.threshold_num = f.threshold_den - (2 * l + k(1)) * (2 * l + k(3));
    f.bound_num = (nl2 - (l + k(1)).pow(2)) * (n - k(1));
    f.bound_den = (nl2 + 3 * l + k(Rational(5, 4))) * (n - k(1)) + 3 * (l + k(Rational(1, 2))).pow(2);
    f.difference = f.threshold_num * f.bound_den - f.bound_num * f.threshold_den;
    return f;
}

Certificate certify_bound_comparison(const CertifyOptions& options, std::optional<Rational> lambda_cap)
{
    if (lambda_cap && !(*lambda_cap > Rational(-1, 2))) {
        throw DomainError("certify_bound_comparison: lambda cap must exceed -1/2");
    }
    const std::vector<std::string> nl{"n", "lambda"};
    const MPoly to_n = MPoly::variable(nl, "n") + MPoly::constant(nl, 2);
    const MPoly to_l = MPoly::variable(nl, "lambda") - MPoly::constant(nl, Rational(1, 2));
    const std::vector<std::string> ms{"m", "s"};
    auto substitute = [&](const MPoly& p) { return renamed(p.compose(0, to_n).compose(1, to_l), ms); };

    const BoundComparisonForms f = bound_comparison_forms();

    Axis s_axis{"s", 0, std::nullopt, true, false};
    if (lambda_cap) {
        s_axis.hi = *lambda_cap + Rational(1, 2);
    }
    const Region region{Axis{"m", 0, std::nullopt}, s_axis};

    Certificate c = certify("bound_comparison", substitute(f.difference), region, Claim::Positive, options);
    c.notes = {"n = m + 2, lambda = s - 1/2 (n relaxed to real n >= 2)",
               "threshold - bound = polynomial / (threshold_den * bound_den)",
               "threshold = 1 - (2l+1)(2l+3)/(4(n+l)^2 - l - 3/2)",
               "bound = ((n+l)^2 - (l+1)^2) / ((n+l)^2 + 3l + 5/4 + 3(l+1/2)^2/(n-1))"};
    c.side_conditions.push_back(
        certify("threshold_denominator", substitute(f.threshold_den), region, Claim::Positive, options));
    c.side_conditions.back().notes = {"4(n+l)^2 - l - 3/2"};
    c.side_conditions.push_back(
        certify("bound_denominator", substitute(f.bound_den), region, Claim::Positive, options));
    c.side_conditions.back().notes = {"((n+l)^2 + 3l + 5/4)(n-1) + 3(l+1/2)^2"};
    c.verdict = combine(c);
    return c;
}

} // namespace turan
