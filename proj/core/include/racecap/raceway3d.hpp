#pragma once

#include "racecap/geometry.hpp"

namespace racecap {

/// Raceway surface of revolution for one contact, in the contact frame: ball
/// center at the origin, contact direction -zeta, bearing axis parallel to
/// eta through (xi = 0, zeta = zeta_axis). The groove torus is the groove
/// circle revolved about that axis; the rim is the cylindrical land beside
/// the groove, closed off by the planar ring side faces at |eta| = B/2.
struct RacewaySurface {
    double zeta_axis = 0.0;          // signed; above ball for outer, below for inner
    double tube_center_radius = 0.0; // torus center-circle radius
    double tube_radius = 0.0;        // r_g
    double rim_radius = 0.0;         // revolution radius of the land
    double half_groove_width = 0.0;  // b_g/2
    double half_ring_width = 0.0;    // B/2
    double ball_radius = 0.0;

    static RacewaySurface from_geometry(const BearingContactGeometry& g);

    /// Torus implicit value at a point; negative inside the solid torus.
    double torus_implicit(double xi, double eta, double zeta) const;

    /// Gap from the ball surface to the groove torus along the radial ray
    /// with direction (sin phi, cos phi sin theta, -cos phi cos theta).
    /// theta tilts axially (section plane I), phi circumferentially (plane
    /// II). Safeguarded bisection/Newton on the first sign change, bracket
    /// [r_re, 2(r_g + r_re)], tolerance 1e-12 mm. Throws RayMissesRaceway.
    double gap_to_groove(double theta, double phi) const;

    /// Gap to the rim: first hit on the land cylinder within the ring width,
    /// otherwise the planar side face at eta = B/2. Throws RayMissesRaceway
    /// when neither surface lies along the ray.
    double gap_to_rim(double theta, double phi) const;
};

} // namespace racecap
