#pragma once

#include "racecap/geometry.hpp"
#include "racecap/quadrature.hpp"
#include "racecap/semi_analytic.hpp"
#include "racecap/types.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace racecap {

struct SweepGrid {
    double min_um = 0.1;
    double max_um = 5.0;
    int points = 24;
    bool log_spacing = true;

    std::vector<double> gaps_um() const;
};

struct FemOptions {
    int refinement = 3;
    bool richardson = true;
};

struct SweepConfig {
    std::string name = "sweep";
    BearingContactGeometry geometry; // gap field is overridden by the grid
    SectionPlane plane = SectionPlane::I;
    SweepGrid grid;
    std::vector<Method> methods;
    Method reference = Method::F;
    QuadratureSpec quadrature;
    FemOptions fem;
    semi_analytic::Rect a3d_limits; // zero => per-geometry default
};

struct SweepCell {
    double value = 0.0; // F/m or F per the method class
    bool ok = false;
    std::string error;
};

struct SweepReport {
    std::string name;
    std::vector<double> gaps_um;
    std::vector<Method> methods;
    Method reference = Method::F;
    std::vector<std::vector<SweepCell>> values;    // [gap][method]
    std::vector<std::vector<double>> deviations;   // signed (v-ref)/ref; NaN if n/a
    std::vector<std::string> notes;
};

/// Evaluates one method at one gap (mm). Throws the per-method errors.
double evaluate_method(Method m, const SweepConfig& cfg, double gap_mm);

/// Runs the full gap x method matrix; per-cell failures are recorded and the
/// run continues. The reference method is auto-included. jobs <= 0 picks the
/// hardware concurrency.
SweepReport run_sweep(const SweepConfig& cfg, int jobs = 0);

struct BearingNetworkSpec {
    int n_elements = 0;
    int n_unloaded = 0;
    double contact_inner = 0.0; // F, per unloaded element
    double contact_outer = 0.0; // F
    std::vector<double> loaded_extras; // externally supplied branch values, F
};

/// Inner and outer contact in series per element, elements in parallel.
double aggregate_bearing(const BearingNetworkSpec& spec);

/// Plain table for the figure-style reports.
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows; // NaN renders as an empty cell
    std::vector<std::string> notes;
};

Table to_table(const SweepReport& report);
std::string to_csv(const Table& table);

/// Writes <name>.csv and <name>_summary.txt into dir (write-then-rename).
void emit(const Table& table, const std::filesystem::path& dir);
void emit(const SweepReport& report, const std::filesystem::path& dir);

/// Figure-style reports on the 6205-C3 geometry.
Table fig7_table(double rel_permittivity, const SweepGrid& grid);
Table fig8_table(double rel_permittivity, const SweepGrid& grid);
SweepConfig fig10_config(double rel_permittivity);
Table fig11_table(double rel_permittivity, const SweepGrid& grid, const QuadratureSpec& spec = {});
Table fem_convergence_table(const SweepConfig& cfg, int n_max);

} // namespace racecap
