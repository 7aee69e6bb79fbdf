#pragma once

// Test-only reference implementations, independent of the library's
// evaluation paths.

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oracles {

/// Dense composite-trapezoid reference integral.
inline double trapezoid(const std::function<double(double)>& f, double a, double b, long n)
{
    double sum = 0.5 * (f(a) + f(b));
    for (long i = 1; i < n; ++i)
        sum += f(a + (b - a) * i / n);
    return sum * (b - a) / n;
}

/// Composite Simpson (n even).
inline double simpson(const std::function<double(double)>& f, double a, double b, long n)
{
    double sum = f(a) + f(b);
    for (long i = 1; i < n; ++i)
        sum += f(a + (b - a) * i / n) * ((i % 2) ? 4.0 : 2.0);
    return sum * (b - a) / (3.0 * n);
}

/// Per-length capacitance of a cylinder (radius R, gap s above a grounded
/// plane) by a single-layer panel BEM. The plane is handled with mirror-image
/// panels, the cylinder is split into n straight panels with piecewise
/// constant charge density and analytic segment potentials; collocation at
/// panel midpoints at 1 V. Dense Gauss solve.
inline double bem_plane_cylinder(double R, double s, double eps, int n)
{
    const double pi = std::numbers::pi;
    struct P {
        double x0, y0, x1, y1, xm, ym, len;
    };
    std::vector<P> panels(n);
    const double yc = R + s;
    for (int i = 0; i < n; ++i) {
        const double t0 = 2.0 * pi * i / n;
        const double t1 = 2.0 * pi * (i + 1) / n;
        P& p = panels[i];
        p.x0 = R * std::cos(t0);
        p.y0 = yc + R * std::sin(t0);
        p.x1 = R * std::cos(t1);
        p.y1 = yc + R * std::sin(t1);
        p.xm = 0.5 * (p.x0 + p.x1);
        p.ym = 0.5 * (p.y0 + p.y1);
        p.len = std::hypot(p.x1 - p.x0, p.y1 - p.y0);
    }
    // potential at (x,y) of a unit-density segment: -(1/2 pi eps) int ln r dl
    auto segment_pot = [&](double x, double y, const P& p) {
        const double ex = (p.x1 - p.x0) / p.len;
        const double ey = (p.y1 - p.y0) / p.len;
        const double dx = x - p.x0, dy = y - p.y0;
        const double u = dx * ex + dy * ey;   // along the panel
        const double v = dx * -ey + dy * ex;  // normal offset
        const double a = -u, b = p.len - u;
        auto term = [&](double t) {
            const double r2 = t * t + v * v;
            if (r2 <= 0.0)
                return 0.0;
            return 0.5 * t * std::log(r2) - t + std::abs(v) * std::atan2(t, std::abs(v));
        };
        return -(term(b) - term(a)) / (2.0 * pi * eps);
    };
    std::vector<double> A(size_t(n) * n), rhs(n, 1.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            P mirror = panels[j];
            mirror.y0 = -mirror.y0;
            mirror.y1 = -mirror.y1;
            A[size_t(i) * n + j] = segment_pot(panels[i].xm, panels[i].ym, panels[j]) -
                                   segment_pot(panels[i].xm, panels[i].ym, mirror);
        }
    }
    // Gauss elimination with partial pivoting
    std::vector<double> x = rhs;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(A[size_t(i) * n + k]) > std::abs(A[size_t(piv) * n + k]))
                piv = i;
        if (piv != k) {
            for (int c = 0; c < n; ++c)
                std::swap(A[size_t(k) * n + c], A[size_t(piv) * n + c]);
            std::swap(x[k], x[piv]);
        }
        const double d = A[size_t(k) * n + k];
        if (d == 0.0)
            throw std::runtime_error("bem: singular system");
        for (int i = k + 1; i < n; ++i) {
            const double f = A[size_t(i) * n + k] / d;
            if (f == 0.0)
                continue;
            for (int c = k; c < n; ++c)
                A[size_t(i) * n + c] -= f * A[size_t(k) * n + c];
            x[i] -= f * x[k];
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        double ssum = x[i];
        for (int c = i + 1; c < n; ++c)
            ssum -= A[size_t(i) * n + c] * x[c];
        x[i] = ssum / A[size_t(i) * n + i];
    }
    double q = 0.0;
    for (int i = 0; i < n; ++i)
        q += x[i] * panels[i].len;
    return q; // C' = Q'/1V
}

/// Richardson-extrapolated BEM value over panel counts n and 2n.
inline double bem_plane_cylinder_extrapolated(double R, double s, double eps, int n)
{
    const double c1 = bem_plane_cylinder(R, s, eps, n);
    const double c2 = bem_plane_cylinder(R, s, eps, 2 * n);
    return c2 + (c2 - c1) / 3.0; // second-order panels
}

/// Independent circle-intersection predicate: ball (origin, 1) and race
/// circle (center |sigma| on the axis, radius |tau|) cross iff
/// ||tau| - 1| < |sigma| < |tau| + 1.
inline bool circles_intersect(double tau, double sigma)
{
    const double d = std::abs(sigma);
    const double r = std::abs(tau);
    return std::abs(r - 1.0) < d && d < r + 1.0;
}

} // namespace oracles
