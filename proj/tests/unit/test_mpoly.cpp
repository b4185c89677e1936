#include <doctest.h>

#include <random>

#include "turan/mpoly.hpp"

using namespace turan;

namespace {

const std::vector<std::string> kXY{"x", "y"};

MPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, unsigned max_deg, int terms)
{
    std::uniform_int_distribution<int> coef(-20, 20);
    std::uniform_int_distribution<int> den(1, 9);
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    MPoly p(vars);
    for (int i = 0; i < terms; ++i) {
        Exponents e(vars.size());
        for (auto& v : e) {
            v = deg(rng);
        }
        Rational c(coef(rng), den(rng));
        c.canonicalize();
        p.add_term(e, c);
    }
    return p;
}

std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t dim)
{
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 13);
    std::vector<Rational> pt;
    for (std::size_t i = 0; i < dim; ++i) {
        pt.emplace_back(num(rng), den(rng));
        pt.back().canonicalize();
    }
    return pt;
}

} // namespace

TEST_CASE("parse_rational")
{
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-7/21") == Rational(-1, 3));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-1.5e2") == -150);
    CHECK(parse_rational("2.5e-3") == Rational(1, 400));
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS(parse_rational(""));
}

TEST_CASE("basic identities")
{
    const MPoly x = MPoly::variable(kXY, "x");
    const MPoly y = MPoly::variable(kXY, "y");
    const MPoly one = MPoly::constant(kXY, 1);

    CHECK((x - x).is_zero());
    CHECK((x - x).terms().empty());
    CHECK((x * x).shift(0, 1) == x * x + Rational(2) * x + one);
    CHECK((x + y).pow(2) == x * x + Rational(2) * x * y + y * y);
    CHECK((x * y).degree(0) == 1);
    CHECK((x * x * y).degrees() == std::vector<unsigned>{2, 1});
    CHECK((x * x * y + x * y * y).monomial_content() == Exponents{1, 1});
    CHECK((x * x * y).divide_by_monomial({1, 1}).value() == x);
    CHECK_FALSE((x + y).divide_by_monomial({1, 0}).has_value());
    CHECK(x.lift({"w", "x", "y"}).index_of("x") == 1);
    CHECK_THROWS(x + MPoly::variable({"z"}, "z"));
}

TEST_CASE("ring operations agree with evaluation at random rational points")
{
    std::mt19937_64 rng(20240601);
    const std::vector<std::string> vars{"a", "b", "c"};
    for (int trial = 0; trial < 20; ++trial) {
        const MPoly p = random_poly(rng, vars, 4, 8);
        const MPoly q = random_poly(rng, vars, 3, 6);
        const auto pt = random_point(rng, 3);
        const Rational pv = p.evaluate(pt), qv = q.evaluate(pt);
        CHECK((p + q).evaluate(pt) == pv + qv);
        CHECK((p - q).evaluate(pt) == pv - qv);
        CHECK((p * q).evaluate(pt) == pv * qv);
        CHECK(p.pow(3).evaluate(pt) == pv * pv * pv);

        const Rational c(3, 7);
        auto shifted = pt;
        shifted[1] += c;
        CHECK(p.shift(1, c).evaluate(pt) == p.evaluate(shifted));
        auto scaled = pt;
        scaled[2] *= c;
        CHECK(p.scale(2, c).evaluate(pt) == p.evaluate(scaled));

        auto composed = pt;
        composed[0] = qv;
        CHECK(p.compose(0, q).evaluate(pt) == p.evaluate(composed));

        std::vector<double> dpt;
        for (const auto& v : pt) {
            dpt.push_back(v.get_d());
        }
        CHECK(p.evaluate(std::span<const double>(dpt)) == doctest::Approx(pv.get_d()).epsilon(1e-9));
    }
}

TEST_CASE("Bernstein coefficients")
{
    const std::vector<std::string> t{"t"};
    const MPoly tt = MPoly::variable(t, "t");
    const MPoly p = tt * (MPoly::constant(t, 1) - tt);
    const std::vector<Interval> unit{{Rational(0), Rational(1)}};
    const CoefficientTensor b = bernstein_coefficients(p, unit);
    CHECK(b.coefficients == std::vector<Rational>{0, Rational(1, 2), 0});

    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(5, 0) == 1);

    // The expansion reproduces the polynomial on the box.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const MPoly q = random_poly(rng, kXY, 3, 7);
        const std::vector<Interval> box{{Rational(-2, 3), Rational(5, 4)}, {Rational(1), Rational(3)}};
        const CoefficientTensor c = bernstein_coefficients(q, box);
        const auto pt = random_point(rng, 2);
        const std::vector<Rational> local{(pt[0] - box[0].lo) / (box[0].hi - box[0].lo),
                                          (pt[1] - box[1].lo) / (box[1].hi - box[1].lo)};
        Rational sum = 0;
        for (std::size_t f = 0; f < c.coefficients.size(); ++f) {
            const auto idx = c.multi_index(f);
            Rational term = c.coefficients[f];
            for (std::size_t i = 0; i < 2; ++i) {
                const unsigned d = c.degrees[i], j = idx[i];
                Rational basis = binomial(d, j);
                for (unsigned k = 0; k < j; ++k) {
                    basis *= local[i];
                }
                for (unsigned k = j; k < d; ++k) {
                    basis *= 1 - local[i];
                }
                term *= basis;
            }
            sum += term;
        }
        CHECK(sum == q.evaluate(pt));
        CHECK(c.flat_index(c.multi_index(c.coefficients.size() - 1)) == c.coefficients.size() - 1);
    }
}

TEST_CASE("degree elevation keeps the Bernstein range enclosure")
{
    const std::vector<std::string> t{"t"};
    const MPoly tt = MPoly::variable(t, "t");
    const MPoly p = tt * tt - tt + MPoly::constant(t, Rational(1, 3));
    const std::vector<AxisBasis> basis{AxisBasis::Bernstein};
    const CoefficientTensor low = tensor_coefficients(p, basis);
    const CoefficientTensor high = tensor_coefficients(p, basis, std::vector<unsigned>{6});
    CHECK(high.coefficients.size() == 7);
    CHECK(high.coefficients.front() == low.coefficients.front());
    CHECK(high.coefficients.back() == low.coefficients.back());
    const auto [lo_min, lo_max] = std::minmax_element(low.coefficients.begin(), low.coefficients.end());
    for (const auto& v : high.coefficients) {
        CHECK(v >= *lo_min);
        CHECK(v <= *lo_max);
    }
}
