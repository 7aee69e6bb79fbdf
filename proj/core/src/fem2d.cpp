#include "racecap/fem2d.hpp"

#include "racecap/errors.hpp"
#include "racecap/semi_analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

namespace racecap {
namespace fem2d {

namespace {

constexpr int direct_solver_limit = 20000;
constexpr double aspect_target = 20.0;

double gap_height(const DimensionlessSection& s, double theta)
{
    return semi_analytic::rho_race(s, theta) - 1.0;
}

/// Angular node positions equidistributing m(theta) = 1/h + tail weight.
std::vector<double> angular_nodes(const DimensionlessSection& s, double theta_max, int count,
                                  double* metric_total)
{
    constexpr int samples = 4096;
    std::vector<double> cum(samples + 1, 0.0);
    std::vector<double> metric(samples + 1);
    double h_integral = 0.0;
    for (int i = 0; i <= samples; ++i)
        metric[i] = 1.0 / gap_height(s, theta_max * i / samples);
    for (int i = 0; i < samples; ++i)
        h_integral += 0.5 * (metric[i] + metric[i + 1]) * theta_max / samples;
    const double tail = 0.1 * h_integral / theta_max;
    for (int i = 0; i <= samples; ++i)
        metric[i] += tail;
    for (int i = 0; i < samples; ++i)
        cum[i + 1] = cum[i] + 0.5 * (metric[i] + metric[i + 1]) * theta_max / samples;
    if (metric_total)
        *metric_total = cum[samples];

    std::vector<double> theta(count + 1);
    theta[0] = 0.0;
    theta[count] = theta_max;
    int seg = 0;
    for (int k = 1; k < count; ++k) {
        const double target = cum[samples] * k / count;
        while (seg < samples && cum[seg + 1] < target)
            ++seg;
        const double f = (target - cum[seg]) / (cum[seg + 1] - cum[seg]);
        theta[k] = theta_max * (seg + f) / samples;
    }
    return theta;
}

double tri_area2(const std::array<double, 2>& a, const std::array<double, 2>& b,
                 const std::array<double, 2>& c)
{
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

struct Csr {
    std::vector<int> ptr, col;
    std::vector<double> val;
    int n = 0;

    void multiply(const std::vector<double>& x, std::vector<double>& y) const
    {
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int k = ptr[i]; k < ptr[i + 1]; ++k)
                s += val[k] * x[col[k]];
            y[i] = s;
        }
    }
};

/// Assembles the unit-permittivity stiffness matrix.
Csr assemble(const Mesh2D& mesh)
{
    struct Entry {
        int r, c;
        double v;
    };
    std::vector<Entry> trip;
    trip.reserve(mesh.triangles.size() * 9);
    for (const auto& t : mesh.triangles) {
        const auto& p0 = mesh.nodes[t[0]];
        const auto& p1 = mesh.nodes[t[1]];
        const auto& p2 = mesh.nodes[t[2]];
        const double a2 = tri_area2(p0, p1, p2);
        const double b[3] = {p1[1] - p2[1], p2[1] - p0[1], p0[1] - p1[1]};
        const double c[3] = {p2[0] - p1[0], p0[0] - p2[0], p1[0] - p0[0]};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                trip.push_back({t[i], t[j], (b[i] * b[j] + c[i] * c[j]) / (2.0 * a2)});
    }
    std::sort(trip.begin(), trip.end(), [](const Entry& x, const Entry& y) {
        return x.r != y.r ? x.r < y.r : x.c < y.c;
    });
    Csr m;
    m.n = mesh.node_count();
    m.ptr.assign(m.n + 1, 0);
    for (size_t k = 0; k < trip.size();) {
        size_t e = k;
        double v = 0.0;
        while (e < trip.size() && trip[e].r == trip[k].r && trip[e].c == trip[k].c)
            v += trip[e++].v;
        m.col.push_back(trip[k].c);
        m.val.push_back(v);
        ++m.ptr[trip[k].r + 1];
        k = e;
    }
    std::partial_sum(m.ptr.begin(), m.ptr.end(), m.ptr.begin());
    return m;
}

/// Lower-banded Cholesky; band[i*(bw+1)+d] holds A(i, i-d).
void banded_cholesky_solve(std::vector<double>& band, int n, int bw, std::vector<double>& x)
{
    auto at = [&](int i, int d) -> double& { return band[size_t(i) * (bw + 1) + d]; };
    for (int i = 0; i < n; ++i) {
        for (int j = std::max(0, i - bw); j <= i; ++j) {
            double s = at(i, i - j);
            const int k0 = std::max({0, i - bw, j - bw});
            for (int k = k0; k < j; ++k)
                s -= at(i, i - k) * at(j, j - k);
            if (i == j) {
                if (s <= 0.0)
                    throw SolverDivergence("banded_cholesky: matrix not positive definite");
                at(i, 0) = std::sqrt(s);
            } else {
                at(i, i - j) = s / at(j, 0);
            }
        }
    }
    for (int i = 0; i < n; ++i) { // forward
        double s = x[i];
        for (int d = 1; d <= std::min(bw, i); ++d)
            s -= at(i, d) * x[i - d];
        x[i] = s / at(i, 0);
    }
    for (int i = n - 1; i >= 0; --i) { // backward
        double s = x[i];
        for (int d = 1; d <= std::min(bw, n - 1 - i); ++d)
            s -= at(i + d, d) * x[i + d];
        x[i] = s / at(i, 0);
    }
}

int pcg(const Csr& A, const std::vector<double>& b, std::vector<double>& x, double rel_tol)
{
    const int n = A.n;
    std::vector<double> r(n), z(n), p(n), Ap(n), dinv(n);
    for (int i = 0; i < n; ++i) {
        double d = 0.0;
        for (int k = A.ptr[i]; k < A.ptr[i + 1]; ++k)
            if (A.col[k] == i)
                d = A.val[k];
        dinv[i] = 1.0 / d;
    }
    A.multiply(x, Ap);
    double bnorm = 0.0;
    for (int i = 0; i < n; ++i) {
        r[i] = b[i] - Ap[i];
        bnorm += b[i] * b[i];
    }
    bnorm = std::sqrt(bnorm);
    if (bnorm == 0.0)
        bnorm = 1.0;
    double rz = 0.0;
    for (int i = 0; i < n; ++i) {
        z[i] = dinv[i] * r[i];
        p[i] = z[i];
        rz += r[i] * z[i];
    }
    const int max_iter = 200000;
    for (int it = 1; it <= max_iter; ++it) {
        A.multiply(p, Ap);
        double pAp = 0.0;
        for (int i = 0; i < n; ++i)
            pAp += p[i] * Ap[i];
        const double alpha = rz / pAp;
        double rnorm = 0.0;
        for (int i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * Ap[i];
            rnorm += r[i] * r[i];
        }
        if (std::sqrt(rnorm) <= rel_tol * bnorm)
            return it;
        double rz_new = 0.0;
        for (int i = 0; i < n; ++i) {
            z[i] = dinv[i] * r[i];
            rz_new += r[i] * z[i];
        }
        const double beta = rz_new / rz;
        rz = rz_new;
        for (int i = 0; i < n; ++i)
            p[i] = z[i] + beta * p[i];
    }
    throw SolverDivergence("pcg: residual target not reached");
}

} // namespace

Mesh2D generate_mesh(const DimensionlessSection& section, int refinement, double theta_max)
{
    section.validate();
    if (refinement < 0)
        throw DomainError("generate_mesh: refinement must be non-negative");
    const double window = semi_analytic::ray_window(section);
    if (theta_max <= 0.0)
        theta_max = window;
    else if (section.plane == SectionPlane::II && section.tau < 0.0 && theta_max > window)
        throw GeometryError("generate_mesh: theta_max beyond the race tangency");
    if (semi_analytic::rho_race(section, 0.0) <= 1.0)
        throw GeometryError("generate_mesh: arcs intersect");

    // base resolution: radial 2, angular sized so the thin-gap aspect ratio
    // stays near the target, both scaled by 2^n
    constexpr int base_radial = 2;
    double metric_total = 0.0;
    angular_nodes(section, theta_max, 16, &metric_total);
    int base_angular = static_cast<int>(std::ceil(metric_total * base_radial / aspect_target / 8.0)) * 8;
    base_angular = std::clamp(base_angular, 16, 4096);

    Mesh2D mesh;
    mesh.section = section;
    mesh.theta_max = theta_max;
    mesh.n_angular = base_angular << refinement;
    mesh.n_radial = base_radial << refinement;

    const std::vector<double> theta = angular_nodes(section, theta_max, mesh.n_angular, nullptr);
    const int nr = mesh.n_radial;
    mesh.nodes.reserve(size_t(mesh.n_angular + 1) * (nr + 1));
    for (int i = 0; i <= mesh.n_angular; ++i) {
        const double rho_out = semi_analytic::rho_race(section, theta[i]);
        const double st = std::sin(theta[i]);
        const double ct = std::cos(theta[i]);
        for (int j = 0; j <= nr; ++j) {
            const double rho = 1.0 + (rho_out - 1.0) * j / nr;
            mesh.nodes.push_back({rho * st, -rho * ct});
        }
    }
    auto id = [nr](int i, int j) { return i * (nr + 1) + j; };
    for (int i = 0; i < mesh.n_angular; ++i) {
        for (int j = 0; j < nr; ++j) {
            const int a = id(i, j), b = id(i + 1, j), c = id(i + 1, j + 1), d = id(i, j + 1);
            mesh.triangles.push_back({a, b, c});
            mesh.triangles.push_back({a, c, d});
        }
    }
    for (const auto& t : mesh.triangles)
        if (tri_area2(mesh.nodes[t[0]], mesh.nodes[t[1]], mesh.nodes[t[2]]) <= 0.0)
            throw GeometryError("generate_mesh: non-positive triangle area");

    for (int i = 0; i < mesh.n_angular; ++i) {
        mesh.boundary.push_back({id(i, 0), id(i + 1, 0), BoundaryTag::Ball});
        mesh.boundary.push_back({id(i, nr), id(i + 1, nr), BoundaryTag::Race});
    }
    for (int j = 0; j < nr; ++j) {
        mesh.boundary.push_back({id(0, j), id(0, j + 1), BoundaryTag::Insulating});
        mesh.boundary.push_back({id(mesh.n_angular, j), id(mesh.n_angular, j + 1),
                                 BoundaryTag::Insulating});
    }
    return mesh;
}

FemSolution solve(const Mesh2D& mesh, double eps, SolverChoice choice)
{
    const int n = mesh.node_count();
    const int nr = mesh.n_radial;
    const Csr K = assemble(mesh);

    // Dirichlet flags from the structured layout: j = 0 ball, j = nr race
    std::vector<signed char> kind(n, 0); // 0 free, 1 ball, 2 race
    for (int i = 0; i < n; ++i) {
        const int j = i % (nr + 1);
        kind[i] = (j == 0) ? 1 : (j == nr) ? 2 : 0;
    }

    std::vector<int> free_id(n, -1);
    std::vector<int> free_nodes;
    for (int i = 0; i < n; ++i)
        if (kind[i] == 0) {
            free_id[i] = static_cast<int>(free_nodes.size());
            free_nodes.push_back(i);
        }
    const int nf = static_cast<int>(free_nodes.size());

    std::vector<double> rhs(nf, 0.0);
    for (int fi = 0; fi < nf; ++fi) {
        const int i = free_nodes[fi];
        double s = 0.0;
        for (int k = K.ptr[i]; k < K.ptr[i + 1]; ++k)
            if (kind[K.col[k]] == 1)
                s -= K.val[k];
        rhs[fi] = s;
    }

    FemSolution sol;
    std::vector<double> uf(nf, 0.0);
    const bool use_direct = (choice == SolverChoice::Direct) ||
                            (choice == SolverChoice::Auto && nf < direct_solver_limit);
    if (use_direct) {
        // free-node band: removing the two Dirichlet layers keeps neighbors
        // within nr+1 positions in the radial-major order
        int bw = 0;
        for (int fi = 0; fi < nf; ++fi) {
            const int i = free_nodes[fi];
            for (int k = K.ptr[i]; k < K.ptr[i + 1]; ++k)
                if (free_id[K.col[k]] >= 0)
                    bw = std::max(bw, fi - free_id[K.col[k]]);
        }
        std::vector<double> band(size_t(nf) * (bw + 1), 0.0);
        for (int fi = 0; fi < nf; ++fi) {
            const int i = free_nodes[fi];
            for (int k = K.ptr[i]; k < K.ptr[i + 1]; ++k) {
                const int fj = free_id[K.col[k]];
                if (fj >= 0 && fj <= fi)
                    band[size_t(fi) * (bw + 1) + (fi - fj)] = K.val[k];
            }
        }
        uf = rhs;
        banded_cholesky_solve(band, nf, bw, uf);
        sol.direct = true;
    } else {
        Csr Kff;
        Kff.n = nf;
        Kff.ptr.assign(nf + 1, 0);
        for (int fi = 0; fi < nf; ++fi) {
            const int i = free_nodes[fi];
            for (int k = K.ptr[i]; k < K.ptr[i + 1]; ++k)
                if (free_id[K.col[k]] >= 0) {
                    Kff.col.push_back(free_id[K.col[k]]);
                    Kff.val.push_back(K.val[k]);
                    ++Kff.ptr[fi + 1];
                }
        }
        std::partial_sum(Kff.ptr.begin(), Kff.ptr.end(), Kff.ptr.begin());
        // start from the linear radial profile, which the thin-gap solution
        // approaches
        for (int fi = 0; fi < nf; ++fi) {
            const int j = free_nodes[fi] % (nr + 1);
            uf[fi] = 1.0 - double(j) / nr;
        }
        sol.iterations = pcg(Kff, rhs, uf, 1e-12);
    }

    sol.potentials.assign(n, 0.0);
    for (int i = 0; i < n; ++i)
        if (kind[i] == 1)
            sol.potentials[i] = 1.0;
    for (int fi = 0; fi < nf; ++fi)
        sol.potentials[free_nodes[fi]] = uf[fi];

    std::vector<double> Ku(n);
    K.multiply(sol.potentials, Ku);
    double q_half = 0.0;
    for (int i = 0; i < n; ++i)
        if (kind[i] == 1)
            q_half += Ku[i];
    double utku = 0.0;
    for (int i = 0; i < n; ++i)
        utku += sol.potentials[i] * Ku[i];

    // the mesh covers half the symmetric sector
    sol.charge_ball = 2.0 * eps * q_half;
    sol.energy = eps * utku;
    sol.capacitance = sol.charge_ball; // Q / 1V
    sol.capacitance_energy = 2.0 * eps * utku;
    return sol;
}

ConvergenceStudy convergence_study(const DimensionlessSection& section, int n_max, double eps,
                                   double theta_max)
{
    if (n_max < 2)
        throw DomainError("convergence_study: n_max must be at least 2");
    ConvergenceStudy study;
    for (int level = 0; level <= n_max; ++level) {
        const Mesh2D mesh = generate_mesh(section, level, theta_max);
        const FemSolution s = solve(mesh, eps);
        study.rows.push_back({level, mesh.element_count(), s.capacitance, 0.0});
    }
    const int m = static_cast<int>(study.rows.size());
    const double d1 = study.rows[m - 2].capacitance - study.rows[m - 3].capacitance;
    const double d2 = study.rows[m - 1].capacitance - study.rows[m - 2].capacitance;
    if (d2 == 0.0 || d1 / d2 <= 0.0) {
        study.observed_order = 2.0; // already converged to rounding
        study.extrapolated = study.rows[m - 1].capacitance;
    } else {
        study.observed_order = std::log2(d1 / d2);
        study.extrapolated = study.rows[m - 1].capacitance +
                             d2 / (std::pow(2.0, study.observed_order) - 1.0);
    }
    for (auto& row : study.rows)
        row.deviation = (row.capacitance - study.extrapolated) / study.extrapolated;
    return study;
}

void dump_mesh(const Mesh2D& mesh, std::ostream& out)
{
    out << "# racecap 2d mesh: nodes (xi zeta), triangles (a b c), boundary (a b tag)\n";
    out << "nodes " << mesh.node_count() << "\n";
    for (const auto& p : mesh.nodes)
        out << p[0] << " " << p[1] << "\n";
    out << "triangles " << mesh.element_count() << "\n";
    for (const auto& t : mesh.triangles)
        out << t[0] << " " << t[1] << " " << t[2] << "\n";
    out << "boundary " << mesh.boundary.size() << "\n";
    for (const auto& e : mesh.boundary) {
        const char* tag = e.tag == BoundaryTag::Ball ? "ball"
                          : e.tag == BoundaryTag::Race ? "race"
                                                       : "insulating";
        out << e.a << " " << e.b << " " << tag << "\n";
    }
}

} // namespace fem2d
} // namespace racecap
