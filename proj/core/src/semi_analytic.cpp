#include "racecap/semi_analytic.hpp"

#include "racecap/analytic2d.hpp"
#include "racecap/errors.hpp"
#include "racecap/raceway3d.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace racecap {
namespace semi_analytic {

namespace {
constexpr double pi = std::numbers::pi;
} // namespace

GapProfile GapProfile::taylor_effective(double R, double s)
{
    if (!(R > 0.0 && s > 0.0))
        throw DomainError("GapProfile: R and s must be positive");
    GapProfile p;
    p.kind = Kind::TaylorEffective;
    p.domain_min = -std::numeric_limits<double>::infinity();
    p.domain_max = std::numeric_limits<double>::infinity();
    p.h = [R, s](double x) { return s + x * x / (2.0 * R); };
    return p;
}

GapProfile GapProfile::exact_effective(double R, double s)
{
    if (!(R > 0.0 && s > 0.0))
        throw DomainError("GapProfile: R and s must be positive");
    GapProfile p;
    p.kind = Kind::ExactEffective;
    p.domain_min = -R;
    p.domain_max = R;
    p.h = [R, s](double x) { return s + R - std::sqrt(R * R - x * x); };
    return p;
}

GapProfile GapProfile::true_section(const DimensionlessSection& section)
{
    section.validate();
    const double tau = section.tau;
    const double sigma = section.sigma;
    const double sg = (tau > 0.0) ? 1.0 : -1.0;
    const double lim = std::min(1.0, std::abs(tau));
    GapProfile p;
    p.kind = Kind::TrueSection;
    p.domain_min = -lim;
    p.domain_max = lim;
    p.h = [tau, sigma, sg](double x) {
        return -std::sqrt(1.0 - x * x) - sigma + sg * std::sqrt(tau * tau - x * x);
    };
    return p;
}

double cap_profile(const GapProfile& profile, double half_width, double eps,
                   const QuadratureSpec& spec)
{
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw DomainError("cap_profile: half_width must be positive and finite");
    if (half_width > profile.domain_max)
        throw GeometryError("cap_profile: half_width exceeds the profile domain");
    // even integrand: integrate one side and double
    auto f = [&](double x) { return 1.0 / profile.h(x); };
    return 2.0 * eps * integrate(f, 0.0, half_width, spec).value;
}

double cap2d_model_a(double R, double s, double eps, HeightModel height, double half_width,
                     const QuadratureSpec& spec)
{
    GapProfile p = (height == HeightModel::Taylor) ? GapProfile::taylor_effective(R, s)
                                                   : GapProfile::exact_effective(R, s);
    return cap_profile(p, half_width, eps, spec);
}

double cap2d_model_b(const DimensionlessSection& section, double eps, const QuadratureSpec& spec)
{
    GapProfile p = GapProfile::true_section(section);
    const double limit = (section.plane == SectionPlane::I) ? 0.5 * section.beta : 1.0;
    if (limit > p.domain_max)
        throw GeometryError("cap2d_model_b: arcs end before the integration limit");
    return cap_profile(p, limit, eps, spec);
}

double rho_race(const DimensionlessSection& section, double theta)
{
    const double tau = section.tau;
    const double sigma = section.sigma;
    const double sg = (tau > 0.0) ? 1.0 : -1.0;
    const double st = std::sin(theta);
    const double disc = tau * tau - sigma * sigma * st * st;
    if (disc < 0.0)
        throw TangencyNotFound("rho_race: ray misses the race circle");
    return -sigma * std::cos(theta) + sg * std::sqrt(disc);
}

double ray_window(const DimensionlessSection& section)
{
    if (section.plane == SectionPlane::I)
        return analytic2d::theta_limit(section);
    if (section.tau > 0.0)
        return 0.5 * pi;
    const double ratio = std::abs(section.tau / section.sigma);
    if (ratio >= 1.0)
        throw TangencyNotFound("ray_window: no tangency (race circle not separated)");
    return std::asin(ratio);
}

double cap2d_model_d(const DimensionlessSection& section, double eps, const QuadratureSpec& spec)
{
    section.validate();
    const double theta1 = ray_window(section);
    auto f = [&](double th) { return 1.0 / (rho_race(section, th) - 1.0); };
    return 2.0 * eps * integrate(f, 0.0, theta1, spec).value;
}

double cap2d_model_c(const DimensionlessSection& section, double eps, const QuadratureSpec& spec)
{
    section.validate();
    const double theta1 = ray_window(section);
    const double tau = section.tau;
    const double sigma = section.sigma;
    const double sg = (tau > 0.0) ? 1.0 : -1.0;
    auto integrand = [&](double th) {
        const double st = std::sin(th);
        const double ct = std::cos(th);
        const double W = std::sqrt(tau * tau - sigma * sigma * st * st);
        const double r = -sigma * ct + sg * W;
        const double rp = st * (sigma - sg * sigma * sigma * ct / W);
        return std::sqrt(r * r + rp * rp) / (r - 1.0);
    };
    const bool tangency_end = (section.plane == SectionPlane::II && tau < 0.0);
    if (!tangency_end)
        return 2.0 * eps * integrate(integrand, 0.0, theta1, spec).value;
    // the race arc element dl/dtheta has an integrable 1/sqrt singularity at
    // the tangency; theta = theta1 - u^2 regularizes it
    auto sub = [&](double u) { return integrand(theta1 - u * u) * 2.0 * u; };
    return 2.0 * eps * integrate(sub, 0.0, std::sqrt(theta1), spec).value;
}

Rect default_a3d_limits(const BearingContactGeometry& g)
{
    return {g.ball_radius, 0.5 * g.groove_width};
}

double cap3d_model_a(const BearingContactGeometry& g, const Rect& limits,
                     const QuadratureSpec& spec)
{
    g.validate();
    if (!(limits.half_x > 0.0 && limits.half_y > 0.0))
        throw DomainError("cap3d_model_a: limits must be positive");
    const EffectiveRadii R = effective_radii(g);
    const double s = g.gap;
    auto f = [&](double x, double y) {
        return 1.0 / (s + x * x / (2.0 * R.r_x) + y * y / (2.0 * R.r_y));
    };
    // even in both coordinates: one quadrant, times four; mm^2/mm -> m
    const QuadratureResult q = integrate2d(f, 0.0, limits.half_x, 0.0, limits.half_y, spec);
    return 4.0 * g.permittivity * q.value * mm;
}

double cap3d_model_e(const BearingContactGeometry& g, bool include_rim,
                     const QuadratureSpec& spec)
{
    g.validate();
    const RacewaySurface race = RacewaySurface::from_geometry(g);
    const DimensionlessSection sec_i = to_dimensionless(g, SectionPlane::I);
    const DimensionlessSection sec_ii = to_dimensionless(g, SectionPlane::II);
    const double theta_edge = analytic2d::theta_limit(sec_i);
    const double phi_max = ray_window(sec_ii);

    QuadratureSpec inner = spec;
    inner.rel_tol = spec.rel_tol * 0.1;
    inner.abs_tol = spec.abs_tol * 0.1;

    auto phi_slice = [&](double phi) {
        double slice = integrate([&](double th) { return 1.0 / race.gap_to_groove(th, phi); },
                                 0.0, theta_edge, inner)
                           .value;
        if (include_rim)
            slice += integrate([&](double th) { return 1.0 / race.gap_to_rim(th, phi); },
                               theta_edge, 0.5 * pi, inner)
                         .value;
        return slice * std::cos(phi);
    };
    const double I = integrate(phi_slice, 0.0, phi_max, spec).value;
    return 4.0 * g.permittivity * g.ball_radius * g.ball_radius * I * mm;
}

} // namespace semi_analytic
} // namespace racecap
