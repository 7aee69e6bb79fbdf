#include "racecap/geometry.hpp"

#include "racecap/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace racecap {

double effective_radius(double r1, double r2)
{
    if (r1 == 0.0 || r2 == 0.0)
        throw ZeroRadius("effective_radius: zero radius");
    const double inv = 1.0 / r1 + 1.0 / r2;
    if (inv == 0.0)
        throw DegeneratePair("effective_radius: 1/r1 + 1/r2 = 0 (flat equivalent)");
    return 1.0 / inv;
}

void BearingContactGeometry::validate() const
{
    std::ostringstream why;
    if (!(ball_radius > 0.0))
        why << "ball_radius must be positive; ";
    if (!(groove_radius > ball_radius))
        why << "groove_radius must exceed ball_radius; ";
    if (!(raceway_radius > 0.0))
        why << "raceway_radius must be positive; ";
    if (!(gap > 0.0))
        why << "gap must be positive (unloaded, separated contact); ";
    if (!(groove_width > 0.0 && groove_width < 2.0 * groove_radius))
        why << "groove_width must lie in (0, 2 r_g); ";
    if (!(ring_width >= groove_width))
        why << "ring_width must be >= groove_width; ";
    if (!(permittivity > 0.0))
        why << "permittivity must be positive; ";
    const std::string s = why.str();
    if (!s.empty())
        throw InvalidGeometry("BearingContactGeometry: " + s);
}

BearingContactGeometry BearingContactGeometry::create(double ball_radius, double groove_radius,
                                                      double raceway_radius, RingSide side,
                                                      double groove_width, double ring_width,
                                                      double gap, double permittivity)
{
    BearingContactGeometry g;
    g.ball_radius = ball_radius;
    g.groove_radius = groove_radius;
    g.raceway_radius = raceway_radius;
    g.ring_side = side;
    g.groove_width = groove_width;
    g.ring_width = ring_width;
    g.gap = gap;
    g.permittivity = permittivity;
    g.validate();
    return g;
}

BearingContactGeometry BearingContactGeometry::with_gap(double new_gap) const
{
    BearingContactGeometry g = *this;
    g.gap = new_gap;
    g.validate();
    return g;
}

void DimensionlessSection::validate() const
{
    if (sigma != tau - 1.0 - alpha)
        throw InvalidGeometry("DimensionlessSection: sigma must equal tau - 1 - alpha exactly");
    if (!(alpha > 0.0))
        throw InvalidGeometry("DimensionlessSection: alpha must be positive");
    if (plane == SectionPlane::I) {
        if (!(tau > 0.0 && sigma > 0.0))
            throw InvalidGeometry("DimensionlessSection: section plane I requires tau > 0 and sigma > 0");
        if (!(beta > 0.0 && beta < 2.0 * std::abs(tau)))
            throw InvalidGeometry("DimensionlessSection: beta must lie in (0, 2|tau|) in plane I");
    } else {
        // inner ring: tau < 0 and sigma < 0; outer ring: tau > 0 and sigma > 0
        if (!((tau < 0.0 && sigma < 0.0) || (tau > 0.0 && sigma > 0.0)))
            throw InvalidGeometry("DimensionlessSection: plane II requires tau and sigma of equal sign");
    }
}

DimensionlessSection to_dimensionless(const BearingContactGeometry& g, SectionPlane plane)
{
    g.validate();
    DimensionlessSection s;
    s.plane = plane;
    s.alpha = g.gap / g.ball_radius;
    if (plane == SectionPlane::I) {
        s.tau = g.groove_radius / g.ball_radius;
        s.beta = g.groove_width / g.ball_radius;
    } else {
        s.tau = (g.ring_side == RingSide::Inner ? -1.0 : 1.0) * g.raceway_radius / g.ball_radius;
        s.beta = 0.0;
    }
    s.sigma = s.tau - 1.0 - s.alpha;
    s.validate();
    return s;
}

EffectiveRadii effective_radii(const BearingContactGeometry& g)
{
    EffectiveRadii r;
    // groove is concave in plane I on both rings
    r.r_y = effective_radius(g.ball_radius, -g.groove_radius);
    // raceway is convex on the inner ring, concave on the outer
    const double r2x = (g.ring_side == RingSide::Inner) ? g.raceway_radius : -g.raceway_radius;
    r.r_x = effective_radius(g.ball_radius, r2x);
    if (!(r.r_x > 0.0) || !(r.r_y > 0.0))
        throw DegeneratePair("effective_radii: non-positive effective radius for bearing contact");
    return r;
}

BearingContactGeometry preset_6205_c3(RingSide side, double gap_mm, double rel_permittivity)
{
    const bool inner = (side == RingSide::Inner);
    return BearingContactGeometry::create(
        /*ball_radius=*/4.0,
        /*groove_radius=*/inner ? 4.16 : 4.24,
        /*raceway_radius=*/inner ? 15.25 : 23.25,
        side,
        /*groove_width=*/inner ? 5.03 : 4.82,
        /*ring_width=*/15.0,
        gap_mm,
        rel_permittivity * eps0);
}

const char* to_string(Method m)
{
    switch (m) {
    case Method::A2D: return "A2D";
    case Method::A3D: return "A3D";
    case Method::B: return "B";
    case Method::C: return "C";
    case Method::D: return "D";
    case Method::E: return "E";
    case Method::F: return "F";
    case Method::G: return "G";
    }
    return "?";
}

Units units_of(Method m)
{
    switch (m) {
    case Method::A3D:
    case Method::E:
        return Units::Absolute;
    default:
        return Units::PerLength;
    }
}

bool method_from_string(const std::string& s, Method& out)
{
    for (Method m : {Method::A2D, Method::A3D, Method::B, Method::C,
                     Method::D, Method::E, Method::F, Method::G}) {
        if (s == to_string(m)) {
            out = m;
            return true;
        }
    }
    return false;
}

} // namespace racecap
