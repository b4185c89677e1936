#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "turan/gegenbauer.hpp"
#include "turan/zeros.hpp"

using namespace turan;

TEST_CASE("small cases with known zeros")
{
    const ZeroSet a = zeros(UltraParams(0.5, 2));
    REQUIRE(a.zeros.size() == 2);
    CHECK(a.zeros[1] == doctest::Approx(0.5773502691896258).epsilon(1e-15));
    CHECK(a.zeros[1] == static_cast<double>(1.0L / std::sqrt(3.0L)));
    CHECK(a.zeros[0] == -a.zeros[1]);

    const ZeroSet b = zeros(UltraParams(1.0, 2));
    CHECK(b.zeros[1] == doctest::Approx(0.5).epsilon(1e-15));

    for (double l : {-0.4, 0.0, 2.0}) {
        CHECK(zeros(UltraParams(l, 3)).zeros[1] == 0.0);
    }
    CHECK(zeros(UltraParams(0.3, 1)).zeros == std::vector<double>{0.0});
}

TEST_CASE("Chebyshev zeros")
{
    for (int n : {4, 17, 64}) {
        const ZeroSet z = zeros(UltraParams(0.0, n));
        for (int k = 0; k < n; ++k) {
            const double expected = -std::cos((2.0 * k + 1) * M_PI / (2.0 * n));
            CHECK(std::abs(z.zeros[k] - expected) < 1e-14);
        }
    }
}

TEST_CASE("exact sign changes bracket every zero")
{
    for (const auto& lq : {oracle::Q(-2, 5), oracle::Q(1, 2), oracle::Q(3)}) {
        for (int n : {5, 12, 20}) {
            const oracle::Poly p = oracle::gegenbauer(n, lq);
            const ZeroSet z = zeros(UltraParams(lq.get_d(), n));
            for (double x : z.zeros) {
                const oracle::Q lo(x - 1e-12), hi(x + 1e-12);
                CHECK(sgn(oracle::eval(p, lo)) * sgn(oracle::eval(p, hi)) < 0);
            }
        }
    }
}

TEST_CASE("structure: order, symmetry, interlacing, residuals")
{
    for (double l : {-0.49, -0.1, 0.5, 4.0, 25.0}) {
        for (int n = 1; n <= 80; n += 3) {
            const UltraParams p(l, n);
            const ZeroSet z = zeros(p);
            const ZeroSet w = zeros(UltraParams(l, n + 1));
            REQUIRE(static_cast<int>(z.zeros.size()) == n);
            for (int k = 0; k < n; ++k) {
                CHECK(z.zeros[k] > -1.0);
                CHECK(z.zeros[k] < 1.0);
                CHECK(z.zeros[k] == -z.zeros[n - 1 - k]);
                if (k > 0) {
                    CHECK(z.zeros[k - 1] < z.zeros[k]);
                }
                CHECK(w.zeros[k] < z.zeros[k]);
                CHECK(z.zeros[k] < w.zeros[k + 1]);
                const double scale = std::max(1.0, std::abs(eval(p, z.zeros[k]).dp));
                CHECK(z.residuals[k] <= 1e-12 * scale);
            }
        }
    }
}

TEST_CASE("large degree")
{
    const ZeroSet z = zeros(UltraParams(1.5, 400));
    CHECK(z.zeros.size() == 400);
    CHECK(z.largest() < 1.0);
    CHECK(z.largest() * z.largest() <= largest_zero_bound(UltraParams(1.5, 400)) + 1e-12);
}

TEST_CASE("largest-zero bound and proof threshold")
{
    CHECK(largest_zero_bound(UltraParams(0.5, 2)) == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(largest_zero_bound(UltraParams(1.0, 2)) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(largest_zero_bound(UltraParams(0.5, 3)) == doctest::Approx(10.0 / 16.5).epsilon(1e-15));
    CHECK(std::pow(zeros(UltraParams(0.5, 3)).largest(), 2) < largest_zero_bound(UltraParams(0.5, 3)));
    CHECK_THROWS_AS(largest_zero_bound(UltraParams(0.5, 1)), DomainError);

    CHECK(proof_threshold(UltraParams(0.5, 2)) == doctest::Approx(15.0 / 23).epsilon(1e-15));
    CHECK(proof_threshold(UltraParams(0.5, 3)) == doctest::Approx(39.0 / 47).epsilon(1e-15));
    CHECK(proof_threshold(UltraParams(0.0, 2)) == doctest::Approx(1 - 3 / 14.5).epsilon(1e-15));

    for (double l : {-0.49, -0.25, 0.0, 0.5, 3.0, 50.0}) {
        for (int n = 2; n <= 60; ++n) {
            const UltraParams p(l, n);
            const double x = zeros(p).largest();
            CHECK(x * x <= largest_zero_bound(p) + 1e-12);
            CHECK(largest_zero_bound(p) < proof_threshold(p));
        }
    }
}

TEST_CASE("zero sum is zero")
{
    for (int n : {6, 13, 40}) {
        double s = 0.0;
        for (double x : zeros(UltraParams(0.7, n)).zeros) {
            s += x;
        }
        CHECK(std::abs(s) < 1e-13);
    }
}
