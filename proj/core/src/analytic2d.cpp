#include "racecap/analytic2d.hpp"

#include "racecap/errors.hpp"

#include <cmath>
#include <numbers>

namespace racecap {
namespace analytic2d {

namespace {

constexpr double pi = std::numbers::pi;

double discriminant(double tau, double sigma)
{
    const double t = tau * tau - sigma * sigma - 1.0;
    return t * t - 4.0 * sigma * sigma;
}

} // namespace

bool sections_overlap(const DimensionlessSection& s)
{
    return discriminant(s.tau, s.sigma) < 0.0;
}

double kappa(const DimensionlessSection& section)
{
    const double tau = section.tau;
    const double sigma = section.sigma;
    const double t = tau * tau - sigma * sigma - 1.0;
    const double disc = discriminant(tau, sigma);
    const double scale = tau * tau + sigma * sigma + 1.0;
    if (disc < 1e-12 * scale * scale)
        throw OverlapError("kappa: equipotential circles overlap (or are within 1e-12 of touching)");
    // smaller-magnitude root of sigma k^2 - t k + sigma = 0; its reciprocal is
    // the mirror charge location
    const double k = 2.0 * sigma / (t + std::copysign(std::sqrt(disc), t));
    if (!(std::abs(k) < 1.0) || k == 0.0)
        throw OverlapError("kappa: no root with 0 < |kappa| < 1");
    return k;
}

double potential(const DimensionlessSection& section, double kappa, double rho, double theta,
                 double q, double eps)
{
    (void)section;
    const double c = std::cos(theta);
    // squared distances to the charges at kappa and 1/kappa on the axis
    const double d1sq = rho * rho - 2.0 * rho * c * kappa + kappa * kappa;
    const double d2sq = rho * rho - 2.0 * rho * c / kappa + 1.0 / (kappa * kappa);
    if (d1sq <= 0.0 || d2sq <= 0.0)
        throw SingularPoint("potential: evaluation point coincides with a line charge");
    return q / (4.0 * pi * eps) * std::log(d2sq / d1sq);
}

double potential_ball(double kappa, double q, double eps)
{
    return q / (2.0 * pi * eps) * std::log(std::abs(1.0 / kappa));
}

double potential_race(const DimensionlessSection& section, double kappa, double q, double eps)
{
    const double ts = section.tau - section.sigma;
    return q / (2.0 * pi * eps) * std::log(std::abs((ts - 1.0 / kappa) / (ts - kappa)));
}

double charge_per_length(const DimensionlessSection& section, double kappa, double theta1,
                         double q, double eps)
{
    (void)section;
    (void)eps; // the flux density carries eps, Gauss' theorem cancels it
    if (!(theta1 > 0.0 && theta1 <= pi))
        throw DomainError("charge_per_length: theta1 must lie in (0, pi]");
    // branch-safe arctan((1+k)/(1-k) tan(theta1/2)); continuous at theta1 = pi
    const double a = std::atan2((1.0 + kappa) * std::sin(0.5 * theta1),
                                (1.0 - kappa) * std::cos(0.5 * theta1));
    return q * (2.0 / pi) * a;
}

double theta_limit(const DimensionlessSection& section)
{
    if (section.plane == SectionPlane::II)
        return 0.5 * pi;
    const double tau = section.tau;
    const double beta = section.beta;
    if (!(beta > 0.0 && beta < 2.0 * std::abs(tau)))
        throw GeometryError("theta_limit: beta must lie in (0, 2|tau|)");
    const double half = 0.5 * beta;
    // polar angle of the groove edge point (half, sigma - sqrt(tau^2 - half^2))
    // seen from the ball center; atan2 keeps the angle in (0, pi) when the
    // edge rises past the ball equator
    return std::atan2(half, std::sqrt(tau * tau - half * half) - section.sigma);
}

double capacitance_model_f(const DimensionlessSection& section, double eps, double theta1)
{
    const double k = kappa(section);
    if (!(theta1 > 0.0 && theta1 <= pi))
        throw DomainError("capacitance_model_f: theta1 must lie in (0, pi]");
    const double num = 4.0 * eps *
                       std::atan2((1.0 + k) * std::sin(0.5 * theta1),
                                  (1.0 - k) * std::cos(0.5 * theta1));
    const double ts = section.tau - section.sigma;
    const double den = std::log(std::abs((ts - k) / (ts * k - 1.0)));
    return num / std::abs(den);
}

double capacitance_model_f(const DimensionlessSection& section, double eps)
{
    return capacitance_model_f(section, eps, theta_limit(section));
}

ApollonianSolution ApollonianSolution::solve(const DimensionlessSection& section, double eps)
{
    ApollonianSolution a;
    a.section = section;
    a.kappa = analytic2d::kappa(section);
    a.theta1 = theta_limit(section);
    a.phi_ball = potential_ball(a.kappa, 1.0, eps);
    a.phi_race = potential_race(section, a.kappa, 1.0, eps);
    return a;
}

} // namespace analytic2d
} // namespace racecap
