#pragma once

#include "racecap/geometry.hpp"
#include "racecap/quadrature.hpp"

#include <functional>

namespace racecap {
namespace semi_analytic {

enum class HeightModel { Taylor, Exact };

/// Lubrication-gap height profile h(x) along one section coordinate.
/// TaylorEffective: s + x^2/2R. ExactEffective: s + R - sqrt(R^2 - x^2),
/// |x| <= R. TrueSection: vertical gap between the real circle arcs of a
/// dimensionless section (coordinate and height in ball radii).
struct GapProfile {
    enum class Kind { TaylorEffective, ExactEffective, TrueSection };
    Kind kind = Kind::TaylorEffective;
    double domain_min = 0.0;
    double domain_max = 0.0;
    std::function<double(double)> h;

    static GapProfile taylor_effective(double R, double s);
    static GapProfile exact_effective(double R, double s);
    static GapProfile true_section(const DimensionlessSection& section);
};

/// Per-length integral C' = eps * int h^-1 dx over [-half_width, half_width].
double cap_profile(const GapProfile& profile, double half_width, double eps,
                   const QuadratureSpec& spec = {});

/// Model A in one dimension on the effective radius (Taylor or exact height).
/// Lengths in mm, result in F/m.
double cap2d_model_a(double R, double s, double eps, HeightModel height, double half_width,
                     const QuadratureSpec& spec = {});

/// Model B: mutually parallel plates on the true section; limits beta/2
/// (plane I) or the ball radius (plane II).
double cap2d_model_b(const DimensionlessSection& section, double eps,
                     const QuadratureSpec& spec = {});

/// Model C: plates perpendicular to the ball surface, area element on the
/// raceway arc. Model D: same rays, area element on the ball.
double cap2d_model_c(const DimensionlessSection& section, double eps,
                     const QuadratureSpec& spec = {});
double cap2d_model_d(const DimensionlessSection& section, double eps,
                     const QuadratureSpec& spec = {});

/// Race circle along the ray at polar angle theta from the contact axis.
double rho_race(const DimensionlessSection& section, double theta);

/// Angular window of models C/D/G: groove edge (plane I), pi/2 (plane II
/// outer), ray-tangency arcsin|tau/sigma| (plane II inner; throws
/// TangencyNotFound if |tau| >= |sigma|).
double ray_window(const DimensionlessSection& section);

struct Rect {
    double half_x = 0.0; // mm, section plane II direction
    double half_y = 0.0; // mm, section plane I direction
};

/// Model A over a rectangle: C = eps * iint dx dy / (s + x^2/2Rx + y^2/2Ry),
/// absolute F. Default limits: half_x = ball radius, half_y = groove half
/// width (the window of the true-geometry models without rim).
double cap3d_model_a(const BearingContactGeometry& g, const Rect& limits,
                     const QuadratureSpec& spec = {});
Rect default_a3d_limits(const BearingContactGeometry& g);

/// Models D/E in 3D: absolute capacitance from the ball-surface integral
/// C = 4 eps r_re^2 iint cos(phi) / h(theta, phi) dtheta dphi over the
/// groove patch, plus the rim band when include_rim is set.
double cap3d_model_e(const BearingContactGeometry& g, bool include_rim,
                     const QuadratureSpec& spec = {});

} // namespace semi_analytic
} // namespace racecap
