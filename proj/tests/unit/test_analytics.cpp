#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "turan/analytics.hpp"
#include "turan/gegenbauer.hpp"
#include "turan/zeros.hpp"

using namespace turan;

namespace {

double rel_err(double a, double b, double scale = 0.0)
{
    const double d = std::max({std::abs(a), std::abs(b), scale});
    return d == 0.0 ? 0.0 : std::abs(a - b) / d;
}

} // namespace

TEST_CASE("Legendre n = 2 at x = 1/2")
{
    const TuranEval t = turan_eval(UltraParams(0.5, 2), 0.5);
    CHECK(t.delta == doctest::Approx(0.234375).epsilon(1e-15));
    CHECK(t.phi == doctest::Approx(0.3125).epsilon(1e-15));
    CHECK(t.dphi == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(t.d2phi == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("phi is identically one for lambda = 0")
{
    for (int n : {1, 2, 9, 40}) {
        for (double x : {-2.5, -1.0, -0.3, 0.0, 0.77, 1.0, 3.0}) {
            const TuranEval t = turan_eval(UltraParams(0.0, n), x);
            CHECK(t.phi == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(t.dphi == 0.0);
            CHECK(t.d2phi == 0.0);
        }
    }
}

TEST_CASE("n = 1 gives a constant phi")
{
    for (double l : {-0.3, 0.5, 2.0}) {
        for (double x : {-1.5, 0.0, 0.4, 1.0}) {
            const TuranEval t = turan_eval(UltraParams(l, 1), x);
            CHECK(t.phi == doctest::Approx(1.0 / (2 * l + 1)).epsilon(1e-14));
            CHECK(std::abs(t.dphi) < 1e-15);
        }
    }
}

TEST_CASE("phi(1) = 1/(2 lambda + 1)")
{
    for (double l : {-0.49, -0.2, 0.5, 1.0, 10.0}) {
        for (int n : {2, 5, 33}) {
            CHECK(turan_eval(UltraParams(l, n), 1.0).phi == doctest::Approx(1.0 / (2 * l + 1)).epsilon(1e-12));
            CHECK(turan_eval(UltraParams(l, n), -1.0).phi == doctest::Approx(1.0 / (2 * l + 1)).epsilon(1e-12));
        }
    }
}

TEST_CASE("phi and its derivatives match exact rational arithmetic")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-995, 995);
    const std::vector<oracle::Q> lambdas{oracle::Q(-9, 20), oracle::Q(-1, 10), oracle::Q(1, 3), oracle::Q(1),
                                         oracle::Q(7, 2)};
    for (const auto& lq : lambdas) {
        for (int n = 1; n <= 18; ++n) {
            const UltraParams p(lq.get_d(), n);
            for (int trial = 0; trial < 4; ++trial) {
                const oracle::Q xq(num(rng), 1000);
                const auto ref = oracle::phi_values(n, lq, xq);
                const TuranEval t = turan_eval(p, xq.get_d());
                const double phi = ref.phi.get_d();
                CHECK(rel_err(t.phi, phi) < 1e-12);
                CHECK(rel_err(t.delta, oracle::eval(oracle::turan_determinant(n, lq), xq).get_d(), phi) < 1e-12);
                CHECK(rel_err(t.dphi, ref.dphi.get_d(), phi) < 1e-11);
                CHECK(rel_err(t.d2phi, ref.d2phi.get_d(), phi) < 1e-10);
            }
        }
    }
}

TEST_CASE("the psi' limit at the endpoints is continuous")
{
    for (double l : {-0.4, 0.5, 3.0}) {
        for (int n : {2, 6, 25}) {
            const UltraParams p(l, n);
            const double at_one = turan_eval(p, 1.0).d2phi;
            const double near = turan_eval(p, 1.0 - 1e-7).d2phi;
            CHECK(rel_err(at_one, near, turan_eval(p, 1.0).phi) < 1e-4);
            CHECK(rel_err(turan_eval(p, 1.0).dpsi, psi_prime_direct(p, 1.0)) < 1e-12);
            CHECK(rel_err(turan_eval(p, -1.0).dpsi, psi_prime_direct(p, -1.0)) < 1e-12);
        }
    }
}

TEST_CASE("delta'' from phi matches the exact second derivative")
{
    const oracle::Q lq(3, 4);
    for (int n : {2, 5, 11}) {
        const oracle::Poly d2 = oracle::derivative(oracle::derivative(oracle::turan_determinant(n, lq)));
        for (int k = -9; k <= 9; ++k) {
            const oracle::Q xq(k, 10);
            const double got = delta_second_derivative(turan_eval(UltraParams(0.75, n), xq.get_d()));
            CHECK(rel_err(got, oracle::eval(d2, xq).get_d(), 1.0) < 1e-11);
        }
    }
}

TEST_CASE("sum form of phi'")
{
    const UltraParams p(0.5, 2);
    const ZeroSet zs = zeros(p);
    CHECK(phi_prime_sumform(p, 0.5, zs) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(phi_prime_sumform(p, 0.0, zs) == 0.0);
    CHECK(phi_prime_sumform(UltraParams(0.0, 5), 0.3, zeros(UltraParams(0.0, 5))) == 0.0);

    CHECK_THROWS_AS(phi_prime_sumform(UltraParams(0.5, 3), 0.2, zs), ConsistencyError);

    for (double l : {-0.3, 0.4, 2.5}) {
        for (int n : {3, 8, 21}) {
            const UltraParams q(l, n);
            const ZeroSet z = zeros(q);
            for (double x : {-0.99, -0.41, 0.05, 0.6, 1.0, z.largest(), z.zeros[n / 2]}) {
                const TuranEval t = turan_eval(q, x);
                CHECK(rel_err(phi_prime_sumform(q, x, z), t.dphi, t.phi) < 1e-9);
            }
        }
    }
}

TEST_CASE("Hermite interpolation form of delta")
{
    const UltraParams p(0.5, 2);
    CHECK(hermite_representation(p, 0.0, zeros(p)) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(hermite_representation(p, 1.0, zeros(p)) == 0.0);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const UltraParams q(1.0, 5);
    const ZeroSet z = zeros(q);
    for (int i = 0; i < 50; ++i) {
        const double x = u(rng);
        CHECK(rel_err(hermite_representation(q, x, z), turan_eval(q, x).delta) < 1e-9);
    }
    for (double x : z.zeros) {
        CHECK(rel_err(hermite_representation(q, x, z), turan_eval(q, x).delta) < 1e-9);
    }
}

TEST_CASE("discriminants")
{
    const Discriminants d = discriminants(UltraParams(0.5, 2), 0.5);
    CHECK(d.D1 == doctest::Approx(-9.55).epsilon(1e-14));
    CHECK(d.D == doctest::Approx(-11.9375).epsilon(1e-14));
    CHECK(discriminants(UltraParams(1.0, 4), 0.0).D == 0.0);

    const double l = -0.25;
    for (double x : {0.1, 0.5, 0.9}) {
        const Discriminants e = discriminants(UltraParams(l, 2), x);
        const double t = 1 - x * x;
        const double factor = (2 * l + 1) * x * x * (2 * l + 3 - (2 * l + 1) * t);
        CHECK(e.D == doctest::Approx(factor * e.D1).epsilon(1e-14));
    }
}

TEST_CASE("bound families")
{
    const UltraParams p(0.5, 2);
    const BoundReport c = bound_report(p, 0.5, BoundFamily::Corollary);
    CHECK(c.lower == doctest::Approx(0.1875).epsilon(1e-14));
    CHECK(c.value == doctest::Approx(0.234375).epsilon(1e-14));
    CHECK(c.upper.value() == doctest::Approx(0.28125).epsilon(1e-14));

    // At x = 0 the phi(0) side is attained; the other side is phi(1) for the
    // basic estimate and coincides with phi(0) for the sharpened one.
    const UltraParams q(2.0, 6);
    const BoundReport b = bound_report(q, 0.0, BoundFamily::Basic);
    CHECK(b.lower == doctest::Approx(b.value).epsilon(1e-14));
    CHECK(b.upper.value() == doctest::Approx(0.2).epsilon(1e-14));
    const BoundReport bc = bound_report(q, 0.0, BoundFamily::Corollary);
    CHECK(bc.lower == doctest::Approx(bc.value).epsilon(1e-14));
    CHECK(bc.upper.value() == doctest::Approx(bc.value).epsilon(1e-14));
    const BoundReport bn = bound_report(UltraParams(-0.25, 6), 0.0, BoundFamily::Basic);
    CHECK(bn.upper.value() == doctest::Approx(bn.value).epsilon(1e-14));
    CHECK(bn.lower == doctest::Approx(2.0).epsilon(1e-14));

    const BoundReport s = bound_report(p, 0.0, BoundFamily::Szasz);
    CHECK(s.lower == doctest::Approx(1.0 / 12).epsilon(1e-14));
    CHECK(s.value == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(s.upper.value() == doctest::Approx(5.0 / 18).epsilon(1e-14));

    for (int n : {2, 4, 10}) {
        CHECK(std::abs(bound_report(UltraParams(0.5, n), 0.0, BoundFamily::Refinement).value) < 1e-15);
    }

    CHECK_THROWS_AS(bound_report(UltraParams(0.0, 3), 0.2, BoundFamily::Basic), DomainError);
    CHECK_THROWS_AS(bound_report(UltraParams(0.5, 3), 1.5, BoundFamily::Basic), DomainError);
    CHECK_THROWS_AS(bound_report(UltraParams(1.0, 3), 0.2, BoundFamily::Szasz), DomainError);
    CHECK_THROWS_AS(bound_report(UltraParams(0.7, 3), 0.2, BoundFamily::Refinement), DomainError);

    CHECK(parse_bound_family("szasz") == BoundFamily::Szasz);
    CHECK(to_string(BoundFamily::Corollary) == "corollary12");
    CHECK_THROWS_AS(parse_bound_family("nope"), DomainError);
}

TEST_CASE("Turan inequality and convexity on a coarse sweep")
{
    for (double l : {-0.45, -0.1, 0.3, 1.0, 6.0}) {
        for (int n = 1; n <= 30; ++n) {
            const UltraParams p(l, n);
            for (int i = 0; i <= 200; ++i) {
                const double x = -3.0 + 6.0 * i / 200;
                const TuranEval t = turan_eval(p, x);
                CHECK(l * t.d2phi >= -1e-10);
                if (std::abs(x) <= 1.0) {
                    CHECK(t.delta >= -1e-12);
                }
            }
        }
    }
}
