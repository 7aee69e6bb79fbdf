#pragma once

#include "racecap/geometry.hpp"

#include <array>
#include <iosfwd>
#include <vector>

namespace racecap {
namespace fem2d {

enum class BoundaryTag { Ball, Race, Insulating };

/// Transfinite triangle mesh of the half domain between the ball arc
/// (rho = 1) and the race arc, theta in [0, theta_max]; the theta = 0 ray is
/// the symmetry line, the theta = theta_max ray the straight truncation
/// through the groove edge. Node numbering is radial-major so the stiffness
/// bandwidth is n_radial + 2.
struct Mesh2D {
    std::vector<std::array<double, 2>> nodes;    // (xi, zeta), ball radii
    std::vector<std::array<int, 3>> triangles;   // CCW
    struct BoundaryEdge {
        int a, b;
        BoundaryTag tag;
    };
    std::vector<BoundaryEdge> boundary;
    int n_angular = 0;
    int n_radial = 0;
    double theta_max = 0.0;
    DimensionlessSection section;

    int node_count() const { return static_cast<int>(nodes.size()); }
    int element_count() const { return static_cast<int>(triangles.size()); }
};

/// Builds the level-n mesh: base resolution times 2^n in both directions.
/// Angular spacing equidistributes 1/h so the thin-gap elements keep a
/// bounded aspect ratio; radial spacing is uniform between the arcs.
/// theta_max = 0 picks the model window (groove edge / pi/2 / tangency).
Mesh2D generate_mesh(const DimensionlessSection& section, int refinement, double theta_max = 0.0);

struct FemSolution {
    std::vector<double> potentials; // V per node (1 on ball, 0 on race)
    double energy = 0.0;            // J/m, full symmetric sector at 1 V
    double charge_ball = 0.0;       // C/m, full symmetric sector
    double capacitance = 0.0;       // F/m, charge-based (Q / 1V)
    double capacitance_energy = 0.0;
    int iterations = 0;  // 0 for the direct path
    bool direct = false;
};

/// P1 Galerkin solve of Laplace with Dirichlet 1 V on Ball, 0 V on Race and
/// natural (insulating) boundaries elsewhere. Direct banded Cholesky below
/// 20k unknowns, Jacobi-preconditioned CG (rel. residual 1e-12) above;
/// throws SolverDivergence if the residual target is not met. The two paths
/// can be forced for cross-verification.
enum class SolverChoice { Auto, Direct, Iterative };
FemSolution solve(const Mesh2D& mesh, double eps, SolverChoice choice = SolverChoice::Auto);

struct ConvergenceRow {
    int level = 0;
    int elements = 0;
    double capacitance = 0.0; // F/m
    double deviation = 0.0;   // vs the extrapolated value, signed
};

struct ConvergenceStudy {
    std::vector<ConvergenceRow> rows;
    double extrapolated = 0.0;
    double observed_order = 0.0;
};

/// Capacitance per refinement level 0..n_max plus the Richardson limit; the
/// observed order comes from the last level triple.
ConvergenceStudy convergence_study(const DimensionlessSection& section, int n_max, double eps,
                                   double theta_max = 0.0);

/// Plain-text dump: node, triangle and tagged boundary-edge lists.
void dump_mesh(const Mesh2D& mesh, std::ostream& out);

} // namespace fem2d
} // namespace racecap
