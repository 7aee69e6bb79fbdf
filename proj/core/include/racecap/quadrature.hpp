#pragma once

#include <functional>

namespace racecap {

struct QuadratureSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-22; // floor for F or F/m scale integrals
    int max_subdivisions = 2000;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    int subdivisions = 0;
};

/// Adaptive Gauss-Kronrod (G7/K15) on [a, b]. Bisects the interval with the
/// worst error estimate until the summed estimate meets the tolerance.
/// Throws QuadratureFailure once max_subdivisions is exhausted.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

/// Tensor-product integral over [ax,bx] x [ay,by]; the inner (x) integral runs
/// at a tightened tolerance so its error stays below the outer estimate.
QuadratureResult integrate2d(const std::function<double(double, double)>& f,
                             double ax, double bx, double ay, double by,
                             const QuadratureSpec& spec = {});

} // namespace racecap
