#include <algorithm>
#include <string>

#include "turan/certificate.hpp"

// Evidence checking only: no search, no choice of basis or split point. The
// leaf check rebuilds the polynomial from its listed coefficients and basis
// functions and compares it with a direct substitution, so it does not share
// the coefficient conversion used by the search.

namespace turan {

namespace {

CheckResult fail(std::string why)
{
    return {false, std::move(why)};
}

// p with x_i replaced according to the leaf basis, built by composing with
// explicit replacement polynomials.
MPoly substitute(const MPoly& p, const Region& box, const std::vector<LeafBasis>& basis)
{
    const auto& vars = p.variables();
    MPoly q = p;
    for (std::size_t i = 0; i < box.size(); ++i) {
        const Axis& a = box[i];
        const MPoly v = MPoly::variable(vars, vars[i]);
        switch (basis[i]) {
        case LeafBasis::Bernstein:
            q = q.compose(i, MPoly::constant(vars, a.lo) + v * Rational(*a.hi - a.lo));
            break;
        case LeafBasis::Shift:
            q = q.compose(i, MPoly::constant(vars, a.lo) + v);
            break;
        case LeafBasis::Inverted: {
            // Homogenize: sum_k c_k x^k -> sum_k c_k lo^k u^(d-k); checked
            // termwise against u^d * (lo/u)^k.
            const unsigned d = q.degree(i);
            MPoly r(vars);
            for (const auto& [e, c] : q.terms()) {
                MPoly term(vars);
                Exponents rest = e;
                rest[i] = 0;
                term.add_term(rest, c);
                MPoly lo_pow = MPoly::constant(vars, a.lo).pow(e[i]);
                Exponents ue(vars.size(), 0);
                ue[i] = d - e[i];
                MPoly u_pow(vars);
                u_pow.add_term(ue, 1);
                r += term * lo_pow * u_pow;
            }
            q = std::move(r);
            break;
        }
        }
    }
    return q;
}

MPoly rebuild(const std::vector<std::string>& vars, const CoefficientTensor& t,
              const std::vector<LeafBasis>& basis)
{
    // Basis functions per axis and index.
    std::vector<std::vector<MPoly>> funcs(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const unsigned d = t.degrees[i];
        const MPoly x = MPoly::variable(vars, vars[i]);
        const MPoly one_minus = MPoly::constant(vars, 1) - x;
        for (unsigned j = 0; j <= d; ++j) {
            if (basis[i] == LeafBasis::Shift) {
                funcs[i].push_back(x.pow(j));
            } else {
                funcs[i].push_back(binomial(d, j) * x.pow(j) * one_minus.pow(d - j));
            }
        }
    }
    MPoly r(vars);
    for (std::size_t flat = 0; flat < t.coefficients.size(); ++flat) {
        if (t.coefficients[flat] == 0) {
            continue;
        }
        const auto idx = t.multi_index(flat);
        MPoly term = MPoly::constant(vars, t.coefficients[flat]);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            term *= funcs[i][idx[i]];
        }
        r += term;
    }
    return r;
}

bool same_box(const Region& a, const Region& b)
{
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].name != b[i].name || a[i].lo != b[i].lo || a[i].hi != b[i].hi) {
            return false;
        }
    }
    return true;
}

CheckResult check_leaf(const MPoly& reduced, const EvidenceNode& node, Claim claim)
{
    const std::size_t dim = node.box.size();
    if (node.basis.size() != dim || node.tensor.degrees.size() != dim) {
        return fail("leaf basis/degree list has wrong dimension");
    }
    std::size_t size = 1;
    for (unsigned d : node.tensor.degrees) {
        size *= d + 1;
    }
    if (node.tensor.coefficients.size() != size) {
        return fail("leaf coefficient count does not match its degrees");
    }
    for (std::size_t i = 0; i < dim; ++i) {
        const Axis& a = node.box[i];
        switch (node.basis[i]) {
        case LeafBasis::Bernstein:
            if (!a.bounded() || !(a.lo < *a.hi)) {
                return fail("bernstein basis on a non-bounded axis '" + a.name + "'");
            }
            break;
        case LeafBasis::Shift:
            if (a.bounded()) {
                return fail("shift basis on a bounded axis '" + a.name + "'");
            }
            break;
        case LeafBasis::Inverted:
            if (a.bounded() || !(a.lo > 0)) {
                return fail("inverted basis needs [lo, inf) with lo > 0 on '" + a.name + "'");
            }
            break;
        }
    }

    const auto& vars = reduced.variables();
    if (!(rebuild(vars, node.tensor, node.basis) == substitute(reduced, node.box, node.basis))) {
        return fail("leaf coefficients do not reproduce the polynomial on box starting at " +
                    to_string(node.box.front()));
    }

    for (std::size_t flat = 0; flat < size; ++flat) {
        const Rational& c = node.tensor.coefficients[flat];
        if (c < 0) {
            return fail("negative coefficient in leaf");
        }
        if (claim == Claim::Positive && c == 0) {
            const auto idx = node.tensor.multi_index(flat);
            bool base = true;
            for (std::size_t i = 0; i < dim; ++i) {
                base = base && !(node.basis[i] == LeafBasis::Shift && idx[i] != 0);
            }
            if (base) {
                return fail("zero base coefficient in a strict-positivity leaf");
            }
        }
    }
    return {true, {}};
}

CheckResult check_node(const MPoly& reduced, const EvidenceNode& node, Claim claim, std::size_t& open_leaves)
{
    switch (node.kind) {
    case EvidenceNode::Kind::Leaf:
        return check_leaf(reduced, node, claim);
    case EvidenceNode::Kind::Open:
        ++open_leaves;
        return {true, {}};
    case EvidenceNode::Kind::Split: {
        if (node.children.size() != 2 || node.split_axis >= node.box.size()) {
            return fail("malformed split node");
        }
        const Axis& a = node.box[node.split_axis];
        if (!(node.split_at > a.lo) || (a.hi && !(node.split_at < *a.hi))) {
            return fail("split point outside the open interval of axis '" + a.name + "'");
        }
        Region left = node.box;
        Region right = node.box;
        left[node.split_axis].hi = node.split_at;
        right[node.split_axis].lo = node.split_at;
        if (!same_box(node.children[0].box, left) || !same_box(node.children[1].box, right)) {
            return fail("children do not partition the parent box");
        }
        for (const auto& child : node.children) {
            if (auto r = check_node(reduced, child, claim, open_leaves); !r.ok) {
                return r;
            }
        }
        return {true, {}};
    }
    }
    return fail("unknown node kind");
}

} // namespace

CheckResult check_certificate(const Certificate& c)
{
    const MPoly& p = c.polynomial;
    if (c.region.size() != p.arity()) {
        return fail(c.target + ": region dimension mismatch");
    }
    if (c.factor.size() != p.arity()) {
        return fail(c.target + ": factor dimension mismatch");
    }
    for (std::size_t i = 0; i < c.region.size(); ++i) {
        if (c.region[i].name != p.variables()[i]) {
            return fail(c.target + ": region axis names do not match the variables");
        }
        if (c.factor[i] > 0) {
            const Axis& a = c.region[i];
            const bool positive = a.lo > 0 || (a.lo == 0 && a.lo_open);
            if (!(positive || (c.claim == Claim::NonNegative && a.lo >= 0))) {
                return fail(c.target + ": factored variable '" + a.name + "' may be negative or zero");
            }
        }
    }
    const auto reduced = p.divide_by_monomial(c.factor);
    if (!reduced) {
        return fail(c.target + ": monomial factor does not divide the polynomial");
    }

    switch (c.verdict) {
    case Verdict::Refuted: {
        if (c.witness.size() != p.arity()) {
            return fail(c.target + ": witness has wrong dimension");
        }
        for (std::size_t i = 0; i < c.witness.size(); ++i) {
            if (!c.region[i].contains(c.witness[i])) {
                return fail(c.target + ": witness lies outside the region");
            }
        }
        const Rational v = p.evaluate(c.witness);
        const bool bad = c.claim == Claim::Positive ? v <= 0 : v < 0;
        if (!bad) {
            return fail(c.target + ": witness does not violate the claim");
        }
        return {true, {}};
    }
    case Verdict::Proved:
    case Verdict::Inconclusive: {
        if (!c.evidence) {
            return fail(c.target + ": missing evidence tree");
        }
        if (!same_box(c.evidence->box, c.region)) {
            return fail(c.target + ": evidence root does not cover the region");
        }
        std::size_t open_leaves = 0;
        if (auto r = check_node(*reduced, *c.evidence, c.claim, open_leaves); !r.ok) {
            return fail(c.target + ": " + r.reason);
        }
        if (c.verdict == Verdict::Proved && open_leaves > 0) {
            return fail(c.target + ": proved certificate has undecided boxes");
        }
        if (c.verdict == Verdict::Inconclusive && open_leaves != c.uncovered.size()) {
            return fail(c.target + ": uncovered list does not match the open leaves");
        }
        break;
    }
    }

    for (const auto& side : c.side_conditions) {
        if (auto r = check_certificate(side); !r.ok) {
            return fail(c.target + " / " + r.reason);
        }
        if (c.verdict == Verdict::Proved && side.verdict != Verdict::Proved) {
            return fail(c.target + ": proved while side condition '" + side.target + "' is not");
        }
    }
    return {true, {}};
}

} // namespace turan
