#include "racecap/quadrature.hpp"

#include "racecap/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace racecap {

namespace {

// Kronrod 15 abscissae/weights on [0,1] side (symmetric), Gauss 7 embedded.
constexpr double xk[8] = {
    0.000000000000000000, 0.207784955007898468, 0.405845151377397167,
    0.586087235467691130, 0.741531185599394440, 0.864864423359769073,
    0.949107912342758525, 0.991455371120812639};
constexpr double wk[8] = {
    0.209482141084727828, 0.204432940075298892, 0.190350578064785410,
    0.169004726639267903, 0.140653259715525919, 0.104790010322250184,
    0.063092092629978553, 0.022935322010529225};
constexpr double wg[4] = {
    0.417959183673469388, 0.381830050505118945, 0.279705391489276668,
    0.129484966168869693};

struct Interval {
    double a, b, value, err;
    bool operator<(const Interval& o) const { return err < o.err; }
};

Interval gk15(const std::function<double(double)>& f, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double f0 = f(c);
    double k15 = wk[0] * f0;
    double g7 = wg[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = h * xk[i];
        const double fs = f(c + dx) + f(c - dx);
        k15 += wk[i] * fs;
        if (i % 2 == 0)
            g7 += wg[i / 2] * fs;
    }
    k15 *= h;
    g7 *= h;
    // QUADPACK-style estimate: err = scale * min(1, (200 |K-G| / scale)^1.5)
    const double delta = std::abs(k15 - g7);
    const double scale = std::abs(k15);
    double err = delta;
    if (delta > 0.0 && scale > 0.0) {
        const double r = 200.0 * delta / scale;
        err = (r < 1.0) ? scale * r * std::sqrt(r) : scale * std::max(1.0, r / 200.0);
    }
    return {a, b, k15, err};
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec)
{
    QuadratureResult res;
    if (a == b)
        return res;
    std::priority_queue<Interval> queue;
    Interval whole = gk15(f, a, b);
    res.evaluations = 15;
    double total = whole.value;
    double total_err = whole.err;
    queue.push(whole);
    int splits = 0;
    while (total_err > std::max(spec.rel_tol * std::abs(total), spec.abs_tol)) {
        if (splits >= spec.max_subdivisions)
            throw QuadratureFailure("integrate: tolerance not met within max_subdivisions");
        Interval worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Interval left = gk15(f, worst.a, mid);
        Interval right = gk15(f, mid, worst.b);
        res.evaluations += 30;
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        queue.push(left);
        queue.push(right);
        ++splits;
    }
    res.value = total;
    res.error_estimate = total_err;
    res.subdivisions = splits;
    return res;
}

QuadratureResult integrate2d(const std::function<double(double, double)>& f,
                             double ax, double bx, double ay, double by,
                             const QuadratureSpec& spec)
{
    QuadratureSpec inner = spec;
    inner.rel_tol = spec.rel_tol * 0.1;
    inner.abs_tol = spec.abs_tol * 0.1;
    long evals = 0;
    auto row = [&](double y) {
        QuadratureResult r = integrate([&](double x) { return f(x, y); }, ax, bx, inner);
        evals += r.evaluations;
        return r.value;
    };
    QuadratureResult out = integrate(row, ay, by, spec);
    out.evaluations = evals;
    return out;
}

} // namespace racecap
