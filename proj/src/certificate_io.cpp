#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "turan/certificate.hpp"

// Line-oriented text format, one record per line, indentation cosmetic:
//
//   turan-certificate 1
//   begin certificate
//   target <id>
//   note <free text>                     (any number)
//   claim positive|nonnegative
//   variables <v1> <v2> ...
//   region <name> [lo,hi] | (lo,inf) ...  (one per variable)
//   polynomial <term count>
//   term <coefficient> <e1> <e2> ...
//   factor <k1> <k2> ...
//   verdict proved|refuted|inconclusive
//   witness <r1> <r2> ...                (refuted only)
//   evidence                             (followed by one node)
//   uncovered <count>                    (each followed by one "box" line)
//   side-conditions <count>              (each a nested begin/end certificate)
//   end certificate
//
// Nodes:
//   node <interval> ...                  (closed box, "inf)" for unbounded)
//   split <axis> <at>    + two child nodes
//   leaf <basis> ...     + "degrees d..." + "coefficients c..."
//   open
//   end

namespace turan {

namespace {

std::string interval_text(const Axis& a, bool with_flags)
{
    std::string s;
    s += (with_flags && a.lo_open) ? '(' : '[';
    s += to_string(a.lo) + ",";
    if (a.hi) {
        s += to_string(*a.hi);
        s += (with_flags && a.hi_open) ? ')' : ']';
    } else {
        s += "inf)";
    }
    return s;
}

void write_box(std::ostream& os, const Region& box)
{
    for (const auto& a : box) {
        os << ' ' << interval_text(a, false);
    }
}

void write_node(std::ostream& os, const EvidenceNode& node, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    os << pad << "node";
    write_box(os, node.box);
    os << '\n';
    switch (node.kind) {
    case EvidenceNode::Kind::Leaf:
        os << pad << "  leaf";
        for (auto b : node.basis) {
            os << ' ' << to_string(b);
        }
        os << '\n' << pad << "  degrees";
        for (auto d : node.tensor.degrees) {
            os << ' ' << d;
        }
        os << '\n' << pad << "  coefficients";
        for (const auto& c : node.tensor.coefficients) {
            os << ' ' << to_string(c);
        }
        os << '\n';
        break;
    case EvidenceNode::Kind::Open:
        os << pad << "  open\n";
        break;
    case EvidenceNode::Kind::Split:
        os << pad << "  split " << node.split_axis << ' ' << to_string(node.split_at) << '\n';
        for (const auto& child : node.children) {
            write_node(os, child, indent + 2);
        }
        break;
    }
    os << pad << "end\n";
}

void write_body(std::ostream& os, const Certificate& c, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    os << pad << "begin certificate\n";
    os << pad << "target " << c.target << '\n';
    for (const auto& n : c.notes) {
        os << pad << "note " << n << '\n';
    }
    os << pad << "claim " << to_string(c.claim) << '\n';
    os << pad << "variables";
    for (const auto& v : c.polynomial.variables()) {
        os << ' ' << v;
    }
    os << '\n';
    for (const auto& a : c.region) {
        os << pad << "region " << a.name << ' ' << interval_text(a, true) << '\n';
    }
    os << pad << "polynomial " << c.polynomial.terms().size() << '\n';
    for (const auto& [e, coef] : c.polynomial.terms()) {
        os << pad << "term " << to_string(coef);
        for (auto k : e) {
            os << ' ' << k;
        }
        os << '\n';
    }
    os << pad << "factor";
    for (auto k : c.factor) {
        os << ' ' << k;
    }
    os << '\n';
    os << pad << "verdict " << to_string(c.verdict) << '\n';
    if (c.verdict == Verdict::Refuted) {
        os << pad << "witness";
        for (const auto& w : c.witness) {
            os << ' ' << to_string(w);
        }
        os << '\n';
    }
    if (c.evidence) {
        os << pad << "evidence\n";
        write_node(os, *c.evidence, indent + 2);
    }
    os << pad << "uncovered " << c.uncovered.size() << '\n';
    for (const auto& box : c.uncovered) {
        os << pad << "  box";
        write_box(os, box);
        os << '\n';
    }
    os << pad << "side-conditions " << c.side_conditions.size() << '\n';
    for (const auto& side : c.side_conditions) {
        write_body(os, side, indent + 2);
    }
    os << pad << "end certificate\n";
}

class Reader {
public:
    explicit Reader(std::istream& is) : is_(is) {}

    // Next non-empty line split into tokens.
    std::vector<std::string> next()
    {
        std::string line;
        while (std::getline(is_, line)) {
            ++line_no_;
            std::istringstream ls(line);
            std::vector<std::string> tok;
            std::string t;
            while (ls >> t) {
                tok.push_back(t);
            }
            if (!tok.empty()) {
                current_ = line;
                return tok;
            }
        }
        throw std::runtime_error("certificate: unexpected end of input");
    }

    std::vector<std::string> expect(const std::string& keyword, std::size_t min_tokens = 1)
    {
        auto tok = next();
        if (tok[0] != keyword || tok.size() < min_tokens) {
            error("expected '" + keyword + "'");
        }
        return tok;
    }

    [[noreturn]] void error(const std::string& what) const
    {
        throw std::runtime_error("certificate line " + std::to_string(line_no_) + ": " + what + " in '" +
                                 current_ + "'");
    }

    // Rest of the current line after the keyword.
    std::string rest_after(const std::string& keyword) const
    {
        const auto pos = current_.find(keyword);
        std::string r = current_.substr(pos + keyword.size());
        const auto first = r.find_first_not_of(' ');
        return first == std::string::npos ? std::string() : r.substr(first);
    }

private:
    std::istream& is_;
    std::string current_;
    int line_no_ = 0;
};

unsigned to_unsigned(Reader& r, const std::string& s)
{
    try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(s, &used);
        if (used != s.size()) {
            r.error("bad integer");
        }
        return static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
        r.error("bad integer");
    }
}

Rational to_rational(Reader& r, const std::string& s)
{
    try {
        return parse_rational(s);
    } catch (const std::invalid_argument&) {
        r.error("bad rational");
    }
}

Axis parse_interval(Reader& r, const std::string& name, const std::string& text)
{
    if (text.size() < 5 || (text.front() != '[' && text.front() != '(') ||
        (text.back() != ']' && text.back() != ')')) {
        r.error("bad interval");
    }
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        r.error("bad interval");
    }
    Axis a;
    a.name = name;
    a.lo_open = text.front() == '(';
    a.lo = to_rational(r, text.substr(1, comma - 1));
    const std::string hi = text.substr(comma + 1, text.size() - comma - 2);
    if (hi == "inf") {
        if (text.back() != ')') {
            r.error("unbounded interval must end with ')'");
        }
    } else {
        a.hi = to_rational(r, hi);
        a.hi_open = text.back() == ')';
    }
    return a;
}

Region parse_box(Reader& r, const std::vector<std::string>& tok, std::size_t from,
                 const std::vector<std::string>& names)
{
    if (tok.size() - from != names.size()) {
        r.error("box has wrong dimension");
    }
    Region box;
    for (std::size_t i = 0; i < names.size(); ++i) {
        box.push_back(parse_interval(r, names[i], tok[from + i]));
    }
    return box;
}

LeafBasis parse_basis(Reader& r, const std::string& s)
{
    for (auto b : {LeafBasis::Bernstein, LeafBasis::Shift, LeafBasis::Inverted}) {
        if (s == to_string(b)) {
            return b;
        }
    }
    r.error("unknown basis");
}

EvidenceNode parse_node(Reader& r, const std::vector<std::string>& head, const std::vector<std::string>& names)
{
    if (head[0] != "node") {
        r.error("expected 'node'");
    }
    EvidenceNode node;
    node.box = parse_box(r, head, 1, names);
    auto tok = r.next();
    if (tok[0] == "open") {
        node.kind = EvidenceNode::Kind::Open;
    } else if (tok[0] == "leaf") {
        node.kind = EvidenceNode::Kind::Leaf;
        for (std::size_t i = 1; i < tok.size(); ++i) {
            node.basis.push_back(parse_basis(r, tok[i]));
        }
        auto deg = r.expect("degrees");
        for (std::size_t i = 1; i < deg.size(); ++i) {
            node.tensor.degrees.push_back(to_unsigned(r, deg[i]));
        }
        auto coef = r.expect("coefficients");
        for (std::size_t i = 1; i < coef.size(); ++i) {
            node.tensor.coefficients.push_back(to_rational(r, coef[i]));
        }
    } else if (tok[0] == "split" && tok.size() == 3) {
        node.kind = EvidenceNode::Kind::Split;
        node.split_axis = to_unsigned(r, tok[1]);
        node.split_at = to_rational(r, tok[2]);
        node.children.push_back(parse_node(r, r.next(), names));
        node.children.push_back(parse_node(r, r.next(), names));
    } else {
        r.error("expected open, leaf or split");
    }
    r.expect("end");
    return node;
}

Certificate parse_body(Reader& r)
{
    auto tok = r.next();
    if (tok.size() != 2 || tok[0] != "begin" || tok[1] != "certificate") {
        r.error("expected 'begin certificate'");
    }
    Certificate c;
    c.target = r.expect("target", 2)[1];

    tok = r.next();
    while (tok[0] == "note") {
        c.notes.push_back(r.rest_after("note"));
        tok = r.next();
    }
    if (tok[0] != "claim" || tok.size() != 2) {
        r.error("expected 'claim'");
    }
    if (tok[1] == "positive") {
        c.claim = Claim::Positive;
    } else if (tok[1] == "nonnegative") {
        c.claim = Claim::NonNegative;
    } else {
        r.error("unknown claim");
    }

    auto vars_tok = r.expect("variables", 2);
    const std::vector<std::string> names(vars_tok.begin() + 1, vars_tok.end());
    for (const auto& name : names) {
        auto reg = r.expect("region", 3);
        if (reg[1] != name) {
            r.error("region out of variable order");
        }
        c.region.push_back(parse_interval(r, name, reg[2]));
    }

    const unsigned nterms = to_unsigned(r, r.expect("polynomial", 2)[1]);
    c.polynomial = MPoly(names);
    for (unsigned k = 0; k < nterms; ++k) {
        auto t = r.expect("term", 2 + names.size());
        Exponents e;
        for (std::size_t i = 0; i < names.size(); ++i) {
            e.push_back(to_unsigned(r, t[2 + i]));
        }
        c.polynomial.add_term(e, to_rational(r, t[1]));
    }

    auto f = r.expect("factor");
    for (std::size_t i = 1; i < f.size(); ++i) {
        c.factor.push_back(to_unsigned(r, f[i]));
    }

    auto v = r.expect("verdict", 2);
    if (v[1] == "proved") {
        c.verdict = Verdict::Proved;
    } else if (v[1] == "refuted") {
        c.verdict = Verdict::Refuted;
    } else if (v[1] == "inconclusive") {
        c.verdict = Verdict::Inconclusive;
    } else {
        r.error("unknown verdict");
    }

    tok = r.next();
    if (tok[0] == "witness") {
        for (std::size_t i = 1; i < tok.size(); ++i) {
            c.witness.push_back(to_rational(r, tok[i]));
        }
        tok = r.next();
    }
    if (tok[0] == "evidence") {
        c.evidence = parse_node(r, r.next(), names);
        tok = r.next();
    }
    if (tok[0] != "uncovered" || tok.size() != 2) {
        r.error("expected 'uncovered'");
    }
    const unsigned nunc = to_unsigned(r, tok[1]);
    for (unsigned k = 0; k < nunc; ++k) {
        c.uncovered.push_back(parse_box(r, r.expect("box"), 1, names));
    }
    const unsigned nside = to_unsigned(r, r.expect("side-conditions", 2)[1]);
    for (unsigned k = 0; k < nside; ++k) {
        c.side_conditions.push_back(parse_body(r));
    }
    auto end = r.expect("end", 2);
    if (end[1] != "certificate") {
        r.error("expected 'end certificate'");
    }
    return c;
}

} // namespace

void write_certificate(std::ostream& os, const Certificate& c)
{
    os << "turan-certificate 1\n";
    write_body(os, c, 0);
}

std::string write_certificate(const Certificate& c)
{
    std::ostringstream os;
    write_certificate(os, c);
    return os.str();
}

Certificate read_certificate(std::istream& is)
{
    Reader r(is);
    auto head = r.expect("turan-certificate", 2);
    if (head[1] != "1") {
        r.error("unsupported certificate version");
    }
    return parse_body(r);
}

} // namespace turan
