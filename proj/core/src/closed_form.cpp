#include "racecap/closed_form.hpp"

#include "racecap/errors.hpp"

#include <cmath>
#include <numbers>

namespace racecap {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
// touching-guard band relative to the inner radius
constexpr double touch_guard = 1e-12;
} // namespace

double cap_plane_cylinder(double R, double s, double eps)
{
    if (!(R > 0.0))
        throw DomainError("cap_plane_cylinder: R must be positive");
    if (!(s > 0.0))
        throw DomainError("cap_plane_cylinder: s must be positive");
    // R/(R+s-sqrt((2R+s)s)) == (R+s+sqrt((2R+s)s))/R, free of cancellation for s << R
    const double root = std::sqrt((2.0 * R + s) * s);
    const double arg = (R + s + root) / R;
    if (!(arg > 1.0))
        throw DomainError("cap_plane_cylinder: log argument out of range");
    return two_pi * eps / std::log(arg);
}

double cap_eccentric_cylinders(double r1, double r2, double e, double eps)
{
    if (!(r2 > r1 && r1 > 0.0))
        throw GeometryError("cap_eccentric_cylinders: requires r2 > r1 > 0");
    if (e < 0.0)
        throw GeometryError("cap_eccentric_cylinders: eccentricity must be non-negative");
    if (r2 - r1 - e <= touch_guard * r1)
        throw GeometryError("cap_eccentric_cylinders: cylinders touch or intersect");
    // A = r2^2-r1^2+e^2, B = r2^2-r1^2-e^2 share the discriminant
    // D^2 = A^2 - 4 r2^2 e^2 = B^2 - 4 r1^2 e^2; the printed ratio
    // (A-D)/(B-D) * r1/r2 equals (r2 (B+D)) / (r1 (A+D)) inverted, which
    // stays fully conditioned down to e = 0.
    const double A = r2 * r2 - r1 * r1 + e * e;
    const double B = r2 * r2 - r1 * r1 - e * e;
    const double D2 = A * A - 4.0 * r2 * r2 * e * e;
    if (D2 < 0.0)
        throw GeometryError("cap_eccentric_cylinders: geometry discriminant negative");
    const double D = std::sqrt(D2);
    const double arg = (r2 * (B + D)) / (r1 * (A + D));
    return two_pi * eps / std::log(arg);
}

double cap_external_cylinders(double r1, double r2, double d, double eps)
{
    if (!(r1 > 0.0 && r2 > 0.0))
        throw GeometryError("cap_external_cylinders: radii must be positive");
    if (d - (r1 + r2) <= touch_guard * r1)
        throw GeometryError("cap_external_cylinders: cylinders touch or intersect");
    const double u = (d * d - r1 * r1 - r2 * r2) / (2.0 * r1 * r2);
    return two_pi * eps / std::acosh(u);
}

double cap_concentric_cylinders(double r1, double r2, double eps)
{
    if (!(r2 > r1 && r1 > 0.0))
        throw GeometryError("cap_concentric_cylinders: requires r2 > r1 > 0");
    return two_pi * eps / std::log(r2 / r1);
}

double cap_true_pair(const BearingContactGeometry& g, SectionPlane plane)
{
    g.validate();
    const double r1 = g.ball_radius;
    if (plane == SectionPlane::I)
        return cap_eccentric_cylinders(r1, g.groove_radius, g.groove_radius - r1 - g.gap,
                                       g.permittivity);
    if (g.ring_side == RingSide::Outer)
        return cap_eccentric_cylinders(r1, g.raceway_radius, g.raceway_radius - r1 - g.gap,
                                       g.permittivity);
    return cap_external_cylinders(r1, g.raceway_radius, r1 + g.raceway_radius + g.gap,
                                  g.permittivity);
}

} // namespace racecap
