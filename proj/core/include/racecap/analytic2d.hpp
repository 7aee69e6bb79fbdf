#pragma once

#include "racecap/geometry.hpp"

namespace racecap {

/// Exact 2D solution for two eccentric circle-section electrodes built from
/// the Apollonian-circles potential of two line charges. Working frame: ball
/// center at the origin, the polar angle Theta counted from the contact axis
/// (the ray toward the closest raceway point), race circle of radius |tau|
/// centered at -sigma on that axis.
namespace analytic2d {

/// Auxiliary ratio locating the image line charges (charges sit at kappa and
/// 1/kappa on the contact axis). Root of sigma k^2 - (tau^2-sigma^2-1) k +
/// sigma = 0 with |kappa| < 1, evaluated cancellation-free. Throws
/// OverlapError when the equipotential circles would intersect (also for
/// geometries within 1e-12 of touching).
double kappa(const DimensionlessSection& section);

/// True when the ball and race circle sections geometrically intersect;
/// equivalent to a negative discriminant in kappa.
bool sections_overlap(const DimensionlessSection& section);

/// Potential of the two line charges (+q at kappa, -q at 1/kappa) at
/// dimensionless polar point (rho, theta). Throws SingularPoint on the
/// charges themselves.
double potential(const DimensionlessSection& section, double kappa, double rho, double theta,
                 double q, double eps);

/// Electrode potentials for unit line charge.
double potential_ball(double kappa, double q, double eps);
double potential_race(const DimensionlessSection& section, double kappa, double q, double eps);

/// Charge per length on the rolling element for the symmetric sector
/// [-theta1, +theta1]. At theta1 = pi this is the full enclosed charge q; the
/// arctan branch is continuous through theta1 = pi. (The half-contour
/// integral of the flux density is half this value.)
double charge_per_length(const DimensionlessSection& section, double kappa, double theta1,
                         double q, double eps);

/// Integration limit: the polar angle of the groove edge in plane I,
/// atan2(beta/2, sqrt(tau^2 - beta^2/4) - sigma) in (0, pi); pi/2 in plane II.
double theta_limit(const DimensionlessSection& section);

/// Model F per-length capacitance, F/m. Equals
/// charge_per_length(q=1) / (potential_ball - potential_race).
double capacitance_model_f(const DimensionlessSection& section, double eps, double theta1);
double capacitance_model_f(const DimensionlessSection& section, double eps);

struct ApollonianSolution {
    double kappa = 0.0;
    double theta1 = 0.0;
    double phi_ball = 0.0; // V for q = 1
    double phi_race = 0.0; // V for q = 1
    DimensionlessSection section;

    static ApollonianSolution solve(const DimensionlessSection& section, double eps);
};

} // namespace analytic2d
} // namespace racecap
