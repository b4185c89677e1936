#ifndef TURAN_MPOLY_HPP
#define TURAN_MPOLY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace turan {

using Rational = mpq_class;
using Exponents = std::vector<unsigned>;

/// Parses "p", "-p/q" or a finite decimal such as "0.25" exactly.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed, ordered list of variables. Zero coefficients are never stored.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(std::vector<std::string> variables);

    static MPoly constant(std::vector<std::string> variables, const Rational& c);
    static MPoly variable(std::vector<std::string> variables, std::string_view name);

    const std::vector<std::string>& variables() const noexcept { return vars_; }
    const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
    std::size_t arity() const noexcept { return vars_.size(); }
    std::size_t index_of(std::string_view name) const;

    bool is_zero() const noexcept { return terms_.empty(); }
    unsigned degree(std::size_t var) const;
    std::vector<unsigned> degrees() const;
    Rational coefficient(const Exponents& e) const;

    /// Adds c * x^e (merging with an existing term).
    void add_term(const Exponents& e, const Rational& c);

    Rational evaluate(std::span<const Rational> point) const;
    double evaluate(std::span<const double> point) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Rational& c);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
    friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
    friend bool operator==(const MPoly& a, const MPoly& b)
    {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    MPoly pow(unsigned k) const;

    /// Substitutes `replacement` (over the same variables) for variable `var`.
    MPoly compose(std::size_t var, const MPoly& replacement) const;
    /// x_var -> x_var + c
    MPoly shift(std::size_t var, const Rational& c) const;
    /// x_var -> c * x_var
    MPoly scale(std::size_t var, const Rational& c) const;
    /// Re-expresses the polynomial over `variables`, which must contain all
    /// of the current ones.
    MPoly lift(const std::vector<std::string>& variables) const;
    /// Exact division by x^e; nullopt if some term is not divisible.
    std::optional<MPoly> divide_by_monomial(const Exponents& e) const;
    /// Largest x^e dividing every term (all zeros for the zero polynomial).
    Exponents monomial_content() const;

    std::string to_string() const;

private:
    void check_compatible(const MPoly& o) const;

    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

/// Expansion basis along one axis of a coefficient tensor.
enum class AxisBasis {
    Monomial,   ///< x^j
    Bernstein,  ///< binom(d, j) x^j (1 - x)^(d - j) on [0, 1]
};

/// Dense coefficient tensor, row-major over `degrees` (index j_i in 0..degrees[i]).
struct CoefficientTensor {
    std::vector<unsigned> degrees;
    std::vector<Rational> coefficients;

    std::size_t flat_index(const std::vector<unsigned>& idx) const;
    std::vector<unsigned> multi_index(std::size_t flat) const;
};

/// Coefficients of p in the tensor basis given per axis; `degrees` defaults
/// to the per-variable degree of p and may be raised (degree elevation).
CoefficientTensor tensor_coefficients(const MPoly& p, std::span<const AxisBasis> basis,
                                      std::optional<std::vector<unsigned>> degrees = std::nullopt);

struct Interval {
    Rational lo;
    Rational hi;
};

/// Tensor Bernstein coefficients of p over the box (one interval per variable).
CoefficientTensor bernstein_coefficients(const MPoly& p, std::span<const Interval> box);

/// binom(n, k) as an exact integer.
Rational binomial(unsigned n, unsigned k);

} // namespace turan

#endif
