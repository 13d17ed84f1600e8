#include <cmath>
#include <random>

#include "doctest.h"

#include "diskmap/errors.hpp"
#include "diskmap/power_series.hpp"
#include "oracles.hpp"

using namespace diskmap;

namespace {

PowerSeries from(std::vector<Complex> c, double rmax = kDefaultSeriesRadius) { return PowerSeries(std::move(c), rmax); }

PowerSeries random_series(std::mt19937_64& rng, std::size_t order)
{
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<Complex> c(order + 1);
    for (auto& x : c) x = {n(rng), n(rng)};
    return from(std::move(c));
}

void check_coeffs(const PowerSeries& s, const std::vector<Complex>& expected, double tol)
{
    REQUIRE(s.order() + 1 >= expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
        INFO("k = " << k);
        CHECK(std::abs(s[k] - expected[k]) <= tol);
    }
}

} // namespace

TEST_CASE("construction pads to order 3 and validates rmax")
{
    const PowerSeries s = from({1.0, 2.0});
    CHECK(s.order() == 3);
    CHECK(s[3] == Complex{});
    CHECK_THROWS_AS(from({1.0}, 1.0), Error);
    CHECK_THROWS_AS(from({1.0}, 0.0), Error);
    CHECK_THROWS_AS(from({std::nan("")}), Error);
}

TEST_CASE("series_mul")
{
    SUBCASE("(1 + z)(1 - z) = 1 - z^2")
    {
        check_coeffs(series_mul(from({1.0, 1.0}), from({1.0, -1.0})), {1.0, 0.0, -1.0, 0.0}, 0.0);
    }
    SUBCASE("one is the identity")
    {
        std::mt19937_64 rng(3);
        const PowerSeries s = random_series(rng, 12);
        const PowerSeries p = series_mul(PowerSeries::constant(1.0, 12), s);
        for (std::size_t k = 0; k <= 12; ++k) CHECK(p[k] == s[k]);
    }
    SUBCASE("geometric times (1 - z) telescopes, checked against direct convolution")
    {
        const std::vector<Complex> geo(6, 1.0);
        const std::vector<Complex> lin{1.0, -1.0};
        const auto expected = oracle::convolve(geo, lin, 5);
        check_coeffs(series_mul(from(geo), from({1.0, -1.0, 0.0, 0.0, 0.0, 0.0})), expected, 0.0);
        check_coeffs(series_mul(from(geo), from({1.0, -1.0, 0.0, 0.0, 0.0, 0.0})), {1.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.0);
    }
    SUBCASE("truncates at the smaller order and takes the smaller radius")
    {
        const PowerSeries p = series_mul(PowerSeries::constant(1.0, 10, 0.5), PowerSeries::constant(1.0, 4, 0.8));
        CHECK(p.order() == 4);
        CHECK(p.rmax() == 0.5);
    }
}

TEST_CASE("series_exp")
{
    CHECK(series_exp(PowerSeries::constant(0.0, 8))[0] == Complex(1.0));
    for (std::size_t k = 1; k <= 8; ++k) CHECK(series_exp(PowerSeries::constant(0.0, 8))[k] == Complex{});

    SUBCASE("exp(z) has coefficients 1/k!")
    {
        const PowerSeries e = series_exp(PowerSeries::variable(20));
        double fact = 1.0;
        for (std::size_t k = 0; k <= 20; ++k) {
            if (k > 0) fact *= static_cast<double>(k);
            CHECK(std::abs(e[k] - 1.0 / fact) <= 1e-14);
        }
    }
    SUBCASE("exp(log(1/(1-z))) is the geometric series")
    {
        // log(1/(1-z)) = integral of 1/(1-z): sum z^n / n
        std::vector<Complex> log_geo(41, 0.0);
        for (std::size_t n = 1; n <= 40; ++n) log_geo[n] = 1.0 / static_cast<double>(n);
        const PowerSeries e = series_exp(from(log_geo));
        for (std::size_t n = 0; n <= 40; ++n) CHECK(std::abs(e[n] - 1.0) <= 1e-12);
    }
}

TEST_CASE("series_integrate")
{
    check_coeffs(series_integrate(PowerSeries::constant(1.0, 3), 0.0), {0.0, 1.0, 0.0, 0.0}, 0.0);
    check_coeffs(series_integrate(from({1.0, 0.0, 1.0, 0.0, 1.0}), 0.0), {0.0, 1.0, 0.0, 1.0 / 3, 0.0, 1.0 / 5}, 1e-16);

    // 1/(1-z)^2 = sum (n+1) z^n integrates to z/(1-z)
    std::vector<Complex> sq(30);
    for (std::size_t n = 0; n < sq.size(); ++n) sq[n] = static_cast<double>(n + 1);
    const PowerSeries i = series_integrate(from(sq), 0.0);
    CHECK(i.order() == 30);
    CHECK(i[0] == Complex{});
    for (std::size_t n = 1; n <= 30; ++n) CHECK(std::abs(i[n] - 1.0) <= 1e-15);

    CHECK(series_integrate(from(sq), 2.0, 29).order() == 29);
    CHECK(series_integrate(from(sq), 2.0, 29)[0] == Complex(2.0));
}

TEST_CASE("series division and reciprocal")
{
    const PowerSeries one_minus_z = from({1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0});
    const PowerSeries r = series_reciprocal(one_minus_z);
    for (std::size_t k = 0; k <= 6; ++k) CHECK(std::abs(r[k] - 1.0) <= 1e-15);
    const PowerSeries q = series_div(PowerSeries::variable(6), one_minus_z);
    CHECK(q[0] == Complex{});
    for (std::size_t k = 1; k <= 6; ++k) CHECK(std::abs(q[k] - 1.0) <= 1e-15);
    CHECK_THROWS_AS((void)series_reciprocal(PowerSeries::variable(4)), Error);
}

TEST_CASE("series_eval_jet")
{
    SUBCASE("f = z")
    {
        const Jet j = series_eval_jet(from({0.0, 1.0}), {0.3, 0.1});
        CHECK(std::abs(j.f0 - Complex(0.3, 0.1)) <= 1e-16);
        CHECK(j.f1 == Complex(1.0));
        CHECK(j.f2 == Complex{});
        CHECK(j.f3 == Complex{});
    }
    SUBCASE("z/(1-z) at 0.5 against its closed-form derivatives")
    {
        // 64 terms: the f''' tail at |z| = 0.5 is ~1e-13 (40 terms would leave ~5e-7).
        std::vector<Complex> c(65, 1.0);
        c[0] = 0.0;
        const Jet j = series_eval_jet(from(c), 0.5);
        CHECK(std::abs(j.f0 - 1.0) <= 1e-8);
        CHECK(std::abs(j.f1 - 4.0) <= 1e-8);
        CHECK(std::abs(j.f2 - 16.0) <= 1e-8);
        CHECK(std::abs(j.f3 - 96.0) <= 1e-8);
        CHECK(j.tail_bound == doctest::Approx(std::pow(0.5, 64)));
    }
    SUBCASE("(1/2) log((1+z)/(1-z)) at 0")
    {
        std::vector<Complex> c(65, 0.0);
        for (std::size_t k = 1; k <= 64; k += 2) c[k] = 1.0 / static_cast<double>(k);
        const Jet j = series_eval_jet(from(c), 0.0);
        CHECK(j.f0 == Complex{});
        CHECK(j.f1 == Complex(1.0));
        CHECK(j.f2 == Complex{});
        CHECK(std::abs(j.f3 - 2.0) <= 1e-15);
    }
    SUBCASE("radius is enforced")
    {
        const PowerSeries s = from({0.0, 1.0}, 0.5);
        CHECK_NOTHROW((void)series_eval_jet(s, 0.5));
        for (int k = 0; k < 64; ++k) CHECK_NOTHROW((void)series_eval_jet(s, std::polar(0.5, 0.1 * k)));
        try {
            (void)series_eval_jet(s, Complex(0.4, 0.31));
            FAIL("expected RadiusExceeded");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::RadiusExceeded);
        }
    }
}

TEST_CASE("tail warning threshold")
{
    std::vector<Complex> c(65, 1.0);
    CHECK(from(c, 0.9).tail_warning());
    std::vector<Complex> long_c(kDefaultSeriesOrder + 1, 1.0);
    CHECK_FALSE(from(long_c, 0.9).tail_warning());
}

TEST_CASE("product rule holds on truncations")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const PowerSeries a = random_series(rng, 15);
        const PowerSeries b = random_series(rng, 15);
        const PowerSeries lhs = series_derivative(series_mul(a, b));
        const PowerSeries rhs = series_mul(series_derivative(a), b) + series_mul(a, series_derivative(b));
        for (std::size_t k = 0; k <= 14; ++k) CHECK(std::abs(lhs[k] - rhs[k]) <= 1e-12 * (1.0 + std::abs(lhs[k])));
    }
}

TEST_CASE("exp of an antiderivative is normalized at the origin")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const PowerSeries a = random_series(rng, 10);
        const PowerSeries e = series_exp(series_integrate(a, 0.0));
        CHECK(series_eval_jet(e, 0.0).f0 == Complex(1.0));
    }
}
