#include "turan/mpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace turan {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    try {
        if (s.find('/') != std::string::npos || (s.find('.') == std::string::npos &&
                                                 s.find_first_of("eE") == std::string::npos)) {
            Rational r(s, 10);
            if (r.get_den() == 0) {
                throw std::invalid_argument("zero denominator");
            }
            r.canonicalize();
            return r;
        }
        // Finite decimal with optional exponent, converted exactly.
        long exponent = 0;
        if (const auto e = s.find_first_of("eE"); e != std::string::npos) {
            exponent = std::stol(s.substr(e + 1));
            s.erase(e);
        }
        if (const auto dot = s.find('.'); dot != std::string::npos) {
            exponent -= static_cast<long>(s.size() - dot - 1);
            s.erase(dot, 1);
        }
        mpz_class digits(s, 10);
        mpz_class pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
        Rational r = exponent >= 0 ? Rational(digits * pow10) : Rational(digits, pow10);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
}

std::string to_string(const Rational& r)
{
    return r.get_str(10);
}

MPoly::MPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MPoly MPoly::constant(std::vector<std::string> variables, const Rational& c)
{
    MPoly p(std::move(variables));
    p.add_term(Exponents(p.arity(), 0), c);
    return p;
}

MPoly MPoly::variable(std::vector<std::string> variables, std::string_view name)
{
    MPoly p(std::move(variables));
    Exponents e(p.arity(), 0);
    e[p.index_of(name)] = 1;
    p.add_term(e, 1);
    return p;
}

std::size_t MPoly::index_of(std::string_view name) const
{
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
        throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
    }
    return static_cast<std::size_t>(it - vars_.begin());
}

unsigned MPoly::degree(std::size_t var) const
{
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, e[var]);
    }
    return d;
}

std::vector<unsigned> MPoly::degrees() const
{
    std::vector<unsigned> d(arity(), 0);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            d[i] = std::max(d[i], e[i]);
        }
    }
    return d;
}

Rational MPoly::coefficient(const Exponents& e) const
{
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Exponents& e, const Rational& c)
{
    if (e.size() != arity()) {
        throw std::invalid_argument("exponent vector length does not match variable count");
    }
    Rational v = c;
    v.canonicalize();
    if (v == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Rational MPoly::evaluate(std::span<const Rational> point) const
{
    if (point.size() != arity()) {
        throw std::invalid_argument("evaluation point has wrong dimension");
    }
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (unsigned k = 0; k < e[i]; ++k) {
                t *= point[i];
            }
        }
        sum += t;
    }
    return sum;
}

double MPoly::evaluate(std::span<const double> point) const
{
    if (point.size() != arity()) {
        throw std::invalid_argument("evaluation point has wrong dimension");
    }
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.get_d();
        for (std::size_t i = 0; i < e.size(); ++i) {
            t *= std::pow(point[i], static_cast<int>(e[i]));
        }
        sum += t;
    }
    return sum;
}

void MPoly::check_compatible(const MPoly& o) const
{
    if (vars_ != o.vars_) {
        throw std::invalid_argument("polynomials are over different variable lists");
    }
}

MPoly MPoly::operator-() const
{
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) {
        c = -c;
    }
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o)
{
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o)
{
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& o)
{
    check_compatible(o);
    MPoly r(vars_);
    Exponents e(arity());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            r.add_term(e, ca * cb);
        }
    }
    terms_ = std::move(r.terms_);
    return *this;
}

MPoly& MPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) {
        v *= c;
    }
    return *this;
}

MPoly MPoly::pow(unsigned k) const
{
    MPoly r = constant(vars_, 1);
    MPoly base = *this;
    while (k > 0) {
        if (k & 1U) {
            r *= base;
        }
        k >>= 1U;
        if (k > 0) {
            base *= base;
        }
    }
    return r;
}

MPoly MPoly::compose(std::size_t var, const MPoly& replacement) const
{
    check_compatible(replacement);
    std::vector<MPoly> powers{constant(vars_, 1)};
    const unsigned d = degree(var);
    for (unsigned k = 1; k <= d; ++k) {
        powers.push_back(powers.back() * replacement);
    }
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        rest[var] = 0;
        MPoly mono(vars_);
        mono.add_term(rest, c);
        r += mono * powers[e[var]];
    }
    return r;
}

MPoly MPoly::shift(std::size_t var, const Rational& c) const
{
    MPoly rep = variable(vars_, vars_.at(var));
    rep.add_term(Exponents(arity(), 0), c);
    return compose(var, rep);
}

MPoly MPoly::scale(std::size_t var, const Rational& c) const
{
    MPoly r(vars_);
    for (const auto& [e, v] : terms_) {
        Rational f = v;
        for (unsigned k = 0; k < e[var]; ++k) {
            f *= c;
        }
        r.add_term(e, f);
    }
    return r;
}

MPoly MPoly::lift(const std::vector<std::string>& variables) const
{
    std::vector<std::size_t> map;
    for (const auto& v : vars_) {
        const auto it = std::find(variables.begin(), variables.end(), v);
        if (it == variables.end()) {
            throw std::invalid_argument("lift target lacks variable '" + v + "'");
        }
        map.push_back(static_cast<std::size_t>(it - variables.begin()));
    }
    MPoly r(variables);
    for (const auto& [e, c] : terms_) {
        Exponents ne(variables.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            ne[map[i]] = e[i];
        }
        r.add_term(ne, c);
    }
    return r;
}

std::optional<MPoly> MPoly::divide_by_monomial(const Exponents& m) const
{
    if (m.size() != arity()) {
        throw std::invalid_argument("monomial has wrong dimension");
    }
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < m[i]) {
                return std::nullopt;
            }
            ne[i] -= m[i];
        }
        r.add_term(ne, c);
    }
    return r;
}

Exponents MPoly::monomial_content() const
{
    if (terms_.empty()) {
        return Exponents(arity(), 0);
    }
    Exponents m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

std::string MPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    // Highest total degree first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool has_var = std::any_of(e.begin(), e.end(), [](unsigned k) { return k > 0; });
        if (!has_var || mag != 1) {
            os << mag.get_str();
            if (has_var) {
                os << '*';
            }
        }
        bool first_var = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            os << (first_var ? "" : "*") << vars_[i];
            if (e[i] > 1) {
                os << '^' << e[i];
            }
            first_var = false;
        }
        first = false;
    }
    return os.str();
}

std::size_t CoefficientTensor::flat_index(const std::vector<unsigned>& idx) const
{
    std::size_t flat = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        flat = flat * (degrees[i] + 1) + idx[i];
    }
    return flat;
}

std::vector<unsigned> CoefficientTensor::multi_index(std::size_t flat) const
{
    std::vector<unsigned> idx(degrees.size());
    for (std::size_t i = degrees.size(); i-- > 0;) {
        idx[i] = static_cast<unsigned>(flat % (degrees[i] + 1));
        flat /= degrees[i] + 1;
    }
    return idx;
}

Rational binomial(unsigned n, unsigned k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

CoefficientTensor tensor_coefficients(const MPoly& p, std::span<const AxisBasis> basis,
                                      std::optional<std::vector<unsigned>> degrees)
{
    if (basis.size() != p.arity()) {
        throw std::invalid_argument("one basis per variable is required");
    }
    CoefficientTensor t;
    t.degrees = degrees ? *degrees : p.degrees();
    if (t.degrees.size() != p.arity()) {
        throw std::invalid_argument("degree list has wrong dimension");
    }
    std::size_t size = 1;
    for (unsigned d : t.degrees) {
        size *= d + 1;
    }
    t.coefficients.assign(size, Rational(0));
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > t.degrees[i]) {
                throw std::invalid_argument("requested degree is below the polynomial's degree");
            }
        }
        t.coefficients[t.flat_index(e)] = c;
    }

    // Along each Bernstein axis of degree d:  b_j = sum_{k<=j} binom(j,k)/binom(d,k) a_k.
    for (std::size_t axis = 0; axis < basis.size(); ++axis) {
        if (basis[axis] != AxisBasis::Bernstein) {
            continue;
        }
        const unsigned d = t.degrees[axis];
        std::vector<Rational> inv_binom_d(d + 1);
        for (unsigned k = 0; k <= d; ++k) {
            inv_binom_d[k] = 1 / binomial(d, k);
        }
        for (std::size_t flat = 0; flat < size; ++flat) {
            auto idx = t.multi_index(flat);
            if (idx[axis] != 0) {
                continue;
            }
            std::vector<Rational> a(d + 1);
            for (unsigned k = 0; k <= d; ++k) {
                idx[axis] = k;
                a[k] = t.coefficients[t.flat_index(idx)];
            }
            for (unsigned j = 0; j <= d; ++j) {
                Rational b = 0;
                for (unsigned k = 0; k <= j; ++k) {
                    if (a[k] != 0) {
                        b += binomial(j, k) * inv_binom_d[k] * a[k];
                    }
                }
                idx[axis] = j;
                t.coefficients[t.flat_index(idx)] = b;
            }
        }
    }
    return t;
}

CoefficientTensor bernstein_coefficients(const MPoly& p, std::span<const Interval> box)
{
    if (box.size() != p.arity()) {
        throw std::invalid_argument("one interval per variable is required");
    }
    MPoly q = p;
    for (std::size_t i = 0; i < box.size(); ++i) {
        // x = lo + (hi - lo) t
        q = q.shift(i, box[i].lo).scale(i, box[i].hi - box[i].lo);
    }
    std::vector<AxisBasis> basis(p.arity(), AxisBasis::Bernstein);
    return tensor_coefficients(q, basis);
}

} // namespace turan
