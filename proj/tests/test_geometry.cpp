#include "racecap/errors.hpp"
#include "racecap/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace racecap;

TEST_CASE("effective radius reproduces the 6205 table values")
{
    // table values are rounded to two decimals -> 0.5% window
    CHECK(effective_radius(4.0, -4.16) == doctest::Approx(104.0).epsilon(0.005));
    CHECK(effective_radius(4.0, -4.24) == doctest::Approx(70.67).epsilon(0.005));
    CHECK(effective_radius(4.0, 15.25) == doctest::Approx(3.17).epsilon(0.005));
    CHECK(effective_radius(4.0, -23.25) == doctest::Approx(4.83).epsilon(0.005));
}

TEST_CASE("effective radius edge cases")
{
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(effective_radius(4.0, inf) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK_THROWS_AS(effective_radius(0.0, 5.0), ZeroRadius);
    CHECK_THROWS_AS(effective_radius(5.0, 0.0), ZeroRadius);
    CHECK_THROWS_AS(effective_radius(5.0, -5.0), DegeneratePair);
}

TEST_CASE("dimensionless mapping follows the sign conventions")
{
    const BearingContactGeometry outer = preset_6205_c3(RingSide::Outer, 0.004, 1.0);
    const DimensionlessSection si = to_dimensionless(outer, SectionPlane::I);
    CHECK(si.tau == doctest::Approx(1.06).epsilon(1e-12));
    CHECK(si.alpha == doctest::Approx(0.001).epsilon(1e-12));
    CHECK(si.sigma == doctest::Approx(0.059).epsilon(1e-12));
    CHECK(si.beta == doctest::Approx(4.82 / 4.0).epsilon(1e-12));

    const BearingContactGeometry inner = preset_6205_c3(RingSide::Inner, 0.004, 1.0);
    const DimensionlessSection sii = to_dimensionless(inner, SectionPlane::II);
    CHECK(sii.tau == doctest::Approx(-3.8125).epsilon(1e-12));
    CHECK(sii.sigma == doctest::Approx(-4.8135).epsilon(1e-12));

    const DimensionlessSection soii = to_dimensionless(outer, SectionPlane::II);
    CHECK(soii.tau > 0.0);
    CHECK(soii.sigma > 0.0);
}

TEST_CASE("sigma is derived bit-for-bit")
{
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> gap(1e-5, 0.1);
    for (int i = 0; i < 200; ++i) {
        const double s = gap(rng);
        for (RingSide side : {RingSide::Inner, RingSide::Outer}) {
            const BearingContactGeometry g = preset_6205_c3(side, s, 2.2);
            for (SectionPlane p : {SectionPlane::I, SectionPlane::II}) {
                const DimensionlessSection sec = to_dimensionless(g, p);
                CHECK(sec.sigma == sec.tau - 1.0 - sec.alpha);
            }
        }
    }
}

TEST_CASE("round trip to dimensional radii")
{
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> gap(1e-5, 0.05);
    std::uniform_real_distribution<double> ball(1.0, 10.0);
    for (int i = 0; i < 200; ++i) {
        const double r_re = ball(rng);
        const double s = gap(rng);
        const BearingContactGeometry g = BearingContactGeometry::create(
            r_re, r_re * 1.04, r_re * 3.8, RingSide::Inner, r_re * 1.2, r_re * 4.0, s, eps0);
        const DimensionlessSection si = to_dimensionless(g, SectionPlane::I);
        CHECK(si.tau * r_re == doctest::Approx(g.groove_radius).epsilon(1e-12));
        CHECK(si.alpha * r_re == doctest::Approx(g.gap).epsilon(1e-12));
        const DimensionlessSection sii = to_dimensionless(g, SectionPlane::II);
        CHECK(std::abs(sii.tau) * r_re == doctest::Approx(g.raceway_radius).epsilon(1e-12));
    }
}

TEST_CASE("alpha to zero limit: sigma approaches tau - 1")
{
    const BearingContactGeometry g = preset_6205_c3(RingSide::Outer, 1e-9, 1.0);
    const DimensionlessSection s = to_dimensionless(g, SectionPlane::I);
    CHECK(s.sigma == doctest::Approx(s.tau - 1.0).epsilon(1e-8));
}

TEST_CASE("geometry invariants are enforced")
{
    CHECK_THROWS_AS(BearingContactGeometry::create(4, 3.9, 15, RingSide::Inner, 5, 15, 1e-3, eps0),
                    InvalidGeometry); // groove smaller than ball
    CHECK_THROWS_AS(BearingContactGeometry::create(4, 4.16, 15, RingSide::Inner, 5, 15, 0.0, eps0),
                    InvalidGeometry); // touching contact
    CHECK_THROWS_AS(BearingContactGeometry::create(4, 4.16, 15, RingSide::Inner, 5, 4, 1e-3, eps0),
                    InvalidGeometry); // ring narrower than groove
    CHECK_THROWS_AS(BearingContactGeometry::create(4, 4.16, 15, RingSide::Inner, 5, 15, 1e-3, 0.0),
                    InvalidGeometry); // zero permittivity
}

TEST_CASE("race conformity accessor")
{
    const BearingContactGeometry g = preset_6205_c3(RingSide::Outer, 1e-3, 1.0);
    CHECK(g.race_conformity() == doctest::Approx(4.24 / 8.0).epsilon(1e-14));
}
