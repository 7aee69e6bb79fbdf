#include "racecap/raceway3d.hpp"

#include "racecap/errors.hpp"

#include <array>
#include <cmath>

namespace racecap {

RacewaySurface RacewaySurface::from_geometry(const BearingContactGeometry& g)
{
    g.validate();
    RacewaySurface s;
    s.ball_radius = g.ball_radius;
    s.tube_radius = g.groove_radius;
    s.half_groove_width = 0.5 * g.groove_width;
    s.half_ring_width = 0.5 * g.ring_width;
    const double zeta_groove_center = g.groove_radius - g.ball_radius - g.gap;
    if (g.ring_side == RingSide::Outer) {
        s.zeta_axis = g.raceway_radius - g.ball_radius - g.gap;
        s.tube_center_radius = g.raceway_radius - g.groove_radius;
    } else {
        s.zeta_axis = -(g.raceway_radius + g.ball_radius + g.gap);
        s.tube_center_radius = g.raceway_radius + g.groove_radius;
    }
    const double zeta_edge =
        zeta_groove_center - std::sqrt(g.groove_radius * g.groove_radius -
                                       s.half_groove_width * s.half_groove_width);
    s.rim_radius = std::abs(zeta_edge - s.zeta_axis);
    return s;
}

double RacewaySurface::torus_implicit(double xi, double eta, double zeta) const
{
    const double d = std::hypot(xi, zeta - zeta_axis);
    const double m = d - tube_center_radius;
    return m * m + eta * eta - tube_radius * tube_radius;
}

namespace {

struct Ray {
    double ux, uy, uz; // (xi, eta, zeta) direction
};

Ray make_ray(double theta, double phi)
{
    return {std::sin(phi), std::cos(phi) * std::sin(theta), -std::cos(phi) * std::cos(theta)};
}

} // namespace

double RacewaySurface::gap_to_groove(double theta, double phi) const
{
    const Ray u = make_ray(theta, phi);
    auto F = [&](double t) { return torus_implicit(t * u.ux, t * u.uy, t * u.uz); };

    const double t_max = 2.0 * (tube_radius + ball_radius);
    double lo = ball_radius; // the gap point lies beyond the ball surface
    double f_lo = F(lo);
    if (f_lo >= 0.0)
        throw RayMissesRaceway("gap_to_groove: ray origin not inside the groove torus");
    // coarse scan for the first sign change, then safeguarded Newton/bisection
    constexpr int scan = 32;
    double hi = 0.0, f_hi = 0.0;
    bool bracketed = false;
    for (int i = 1; i <= scan; ++i) {
        const double t = ball_radius + (t_max - ball_radius) * i / scan;
        const double f = F(t);
        if (f >= 0.0) {
            hi = t;
            f_hi = f;
            bracketed = true;
            break;
        }
        lo = t;
        f_lo = f;
    }
    if (!bracketed)
        throw RayMissesRaceway("gap_to_groove: no torus crossing within bracket");

    double t = 0.5 * (lo + hi);
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        // Newton step on F, falling back to bisection when it leaves [lo, hi]
        const double xi = t * u.ux, eta = t * u.uy, zeta = t * u.uz;
        const double d = std::hypot(xi, zeta - zeta_axis);
        const double m = d - tube_center_radius;
        const double dd = (xi * u.ux + (zeta - zeta_axis) * u.uz) / (d > 0.0 ? d : 1.0);
        const double fp = 2.0 * m * dd + 2.0 * eta * u.uy;
        const double f = m * m + eta * eta - tube_radius * tube_radius;
        if (f < 0.0) {
            lo = t;
            f_lo = f;
        } else {
            hi = t;
            f_hi = f;
        }
        double tn = (fp != 0.0) ? t - f / fp : 0.0;
        if (!(tn > lo && tn < hi))
            tn = 0.5 * (lo + hi);
        t = tn;
    }
    (void)f_lo;
    (void)f_hi;
    return 0.5 * (lo + hi) - ball_radius;
}

double RacewaySurface::gap_to_rim(double theta, double phi) const
{
    const Ray u = make_ray(theta, phi);
    // land cylinder about the bearing axis: (t ux)^2 + (t uz - zeta_axis)^2 = rim_radius^2
    const double a = u.ux * u.ux + u.uz * u.uz;
    const double b = -2.0 * u.uz * zeta_axis;
    const double c = zeta_axis * zeta_axis - rim_radius * rim_radius;
    const double disc = b * b - 4.0 * a * c;
    if (disc >= 0.0 && a > 0.0) {
        const double sq = std::sqrt(disc);
        for (double t : {(-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)}) {
            if (t > ball_radius && std::abs(t * u.uy) <= half_ring_width)
                return t - ball_radius;
        }
    }
    // past the land: the planar ring side face at |eta| = B/2
    if (std::abs(u.uy) > 1e-14) {
        const double t = half_ring_width / std::abs(u.uy);
        if (t > ball_radius)
            return t - ball_radius;
    }
    throw RayMissesRaceway("gap_to_rim: ray hits neither land nor side face");
}

} // namespace racecap
