#pragma once

#include "racecap/types.hpp"

namespace racecap {

enum class RingSide { Inner, Outer };
enum class SectionPlane { I, II };

/// One ball-raceway contact of a deep groove ball bearing. All radii are
/// stored positive; the sign conventions of the dimensionless mapping are
/// produced only in to_dimensionless(). Lengths in mm, permittivity in F/m.
struct BearingContactGeometry {
    double ball_radius = 0.0;    // r_re
    double groove_radius = 0.0;  // r_g, section plane I curvature
    double raceway_radius = 0.0; // r_rw, radius of revolution (plane II)
    RingSide ring_side = RingSide::Outer;
    double groove_width = 0.0;   // b_g, chord width of the groove
    double ring_width = 0.0;     // B
    double gap = 0.0;            // s, minimal lubricant film
    double permittivity = eps0;  // absolute, eps_r * eps0

    /// Validates the invariants; throws InvalidGeometry.
    static BearingContactGeometry create(double ball_radius, double groove_radius,
                                         double raceway_radius, RingSide side,
                                         double groove_width, double ring_width,
                                         double gap, double permittivity);

    /// Race conformity f = r_g / (2 r_re).
    double race_conformity() const { return groove_radius / (2.0 * ball_radius); }

    BearingContactGeometry with_gap(double new_gap) const;
    void validate() const;
};

/// Dimensionless description of one section plane (all lengths divided by
/// the ball radius). sigma is derived as tau - 1 - alpha, never independent.
struct DimensionlessSection {
    double tau = 0.0;   // signed raceway/groove curvature
    double sigma = 0.0; // signed center distance
    double alpha = 0.0; // gap
    double beta = 0.0;  // groove width (plane I only, else 0)
    SectionPlane plane = SectionPlane::I;

    void validate() const; // throws InvalidGeometry
};

struct EffectiveRadii {
    double r_x = 0.0; // mm, section plane II
    double r_y = 0.0; // mm, section plane I
};

/// Half harmonic mean of two signed radii (concave surfaces negative).
/// Throws ZeroRadius / DegeneratePair. An infinite radius stands for a
/// plane partner and leaves the other radius unchanged.
double effective_radius(double r1, double r2);

/// Table-2 mapping. Plane I: tau = r_g/r_re > 0. Plane II: tau = -r_rw/r_re < 0
/// on the inner ring, +r_rw/r_re > 0 on the outer ring. sigma = tau - 1 - alpha.
DimensionlessSection to_dimensionless(const BearingContactGeometry& g, SectionPlane plane);

EffectiveRadii effective_radii(const BearingContactGeometry& g);

/// 6205-C3 deep groove ball bearing preset.
BearingContactGeometry preset_6205_c3(RingSide side, double gap_mm, double rel_permittivity);

} // namespace racecap
