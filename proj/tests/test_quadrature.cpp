#include "racecap/errors.hpp"
#include "racecap/quadrature.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace racecap;

TEST_CASE("integrates smooth functions to tolerance")
{
    QuadratureSpec spec;
    spec.abs_tol = 1e-16;
    const QuadratureResult r = integrate([](double x) { return std::exp(-x * x); }, 0.0, 3.0, spec);
    CHECK(r.value == doctest::Approx(0.88620734825323908).epsilon(1e-12));
}

TEST_CASE("concentrates on the peak of a capacitance-style integrand")
{
    // 1/(s + x^2/2R): closed-form antiderivative sqrt(2R/s) atan(x / sqrt(2 R s))
    const double R = 70.67, s = 1e-4, w = 2.41;
    auto f = [&](double x) { return 1.0 / (s + x * x / (2.0 * R)); };
    const double exact = std::sqrt(2.0 * R / s) * std::atan(w / std::sqrt(2.0 * R * s));
    QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    const QuadratureResult r = integrate(f, 0.0, w, spec);
    CHECK(r.value == doctest::Approx(exact).epsilon(1e-9));
    CHECK(r.subdivisions > 0);
}

TEST_CASE("domain splitting additivity")
{
    const double R = 3.17, s = 5e-4;
    auto f = [&](double x) { return 1.0 / (s + R - std::sqrt(R * R - x * x)); };
    QuadratureSpec spec;
    spec.rel_tol = 1e-11;
    spec.abs_tol = 1e-16;
    const double whole = integrate(f, 0.0, 3.0, spec).value;
    for (double mid : {0.3, 1.0, 2.9}) {
        const double split = integrate(f, 0.0, mid, spec).value + integrate(f, mid, 3.0, spec).value;
        CHECK(split == doctest::Approx(whole).epsilon(1e-9));
    }
}

TEST_CASE("failure when the budget is exhausted")
{
    QuadratureSpec spec;
    spec.rel_tol = 1e-14;
    spec.abs_tol = 0.0;
    spec.max_subdivisions = 3;
    auto nasty = [](double x) { return 1.0 / std::sqrt(std::abs(x - 0.3141) + 1e-15); };
    CHECK_THROWS_AS(integrate(nasty, 0.0, 1.0, spec), QuadratureFailure);
}

TEST_CASE("2d tensor product against dense reference")
{
    auto f = [](double x, double y) { return 1.0 / (0.01 + x * x + 0.5 * y * y); };
    QuadratureSpec spec;
    spec.abs_tol = 1e-14;
    const double got = integrate2d(f, 0.0, 1.0, 0.0, 0.7, spec).value;
    auto row = [&](double y) {
        return oracles::simpson([&](double x) { return f(x, y); }, 0.0, 1.0, 4096);
    };
    const double want = oracles::simpson(row, 0.0, 0.7, 2048);
    CHECK(got == doctest::Approx(want).epsilon(1e-8));
}
