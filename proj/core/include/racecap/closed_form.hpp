#pragma once

#include "racecap/geometry.hpp"

namespace racecap {

/// Per-length capacitance of a cylinder (radius R) at gap s over a grounded
/// plane: C' = 2 pi eps / ln(R / (R + s - sqrt((2R+s)s))), evaluated in the
/// equivalent cancellation-free arrangement. Returns F/m; lengths in mm.
double cap_plane_cylinder(double R, double s, double eps);

/// Per-length capacitance of an eccentric cylinder capacitor, inner radius r1
/// fully inside outer radius r2 with center distance e (0 <= e < r2 - r1).
/// Reduces to the concentric 2 pi eps / ln(r2/r1) at e = 0.
double cap_eccentric_cylinders(double r1, double r2, double e, double eps);

/// Per-length capacitance of two separated convex cylinders with center
/// distance d > r1 + r2 (same bipolar family as the eccentric form).
double cap_external_cylinders(double r1, double r2, double d, double eps);

double cap_concentric_cylinders(double r1, double r2, double eps);

/// True two-circle closed form for a given contact and section plane:
/// internal pair for the groove and the outer raceway, external pair for the
/// inner raceway in plane II. Eccentricity/center distance derived from the
/// stored positive radii and the gap.
double cap_true_pair(const BearingContactGeometry& g, SectionPlane plane);

} // namespace racecap
