#pragma once

#include <string>

namespace racecap {

/// Vacuum permittivity, F/m (CODATA 2018).
inline constexpr double eps0 = 8.8541878128e-12;

/// Geometry is carried in mm; capacitances are reported in SI (F/m, F).
inline constexpr double mm = 1e-3;

enum class Units { PerLength, Absolute };

/// Capacitance models. A2D/A3D: effective-radii model A in its per-length
/// and absolute forms. B: parallel plates on the true section. C/D: plates
/// perpendicular to the ball with race/ball area elements. E: D in 3D plus
/// the rim band. F: exact 2D two-circle solution. G: 2D finite elements.
enum class Method { A2D, A3D, B, C, D, E, F, G };

const char* to_string(Method m);
Units units_of(Method m);
bool method_from_string(const std::string& s, Method& out);

struct Diagnostics {
    long evaluations = 0;
    double error_estimate = 0.0;
    std::string note;
};

struct CapacitanceResult {
    double value = 0.0; // F/m or F depending on units
    Units units = Units::PerLength;
    Method method = Method::F;
    Diagnostics diag;
};

} // namespace racecap
