#include "racecap/sweep.hpp"

#include "racecap/analytic2d.hpp"
#include "racecap/closed_form.hpp"
#include "racecap/errors.hpp"
#include "racecap/fem2d.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

namespace racecap {

namespace {
constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

std::string format_sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.8e", v);
    return buf;
}
} // namespace

std::vector<double> SweepGrid::gaps_um() const
{
    if (points < 1 || !(min_um > 0.0) || !(max_um >= min_um))
        throw ConfigError("SweepGrid: need points >= 1 and 0 < min <= max");
    std::vector<double> g(points);
    if (points == 1) {
        g[0] = min_um;
        return g;
    }
    for (int i = 0; i < points; ++i) {
        const double f = double(i) / (points - 1);
        g[i] = log_spacing ? min_um * std::pow(max_um / min_um, f)
                           : min_um + (max_um - min_um) * f;
    }
    return g;
}

double evaluate_method(Method m, const SweepConfig& cfg, double gap_mm)
{
    const BearingContactGeometry g = cfg.geometry.with_gap(gap_mm);
    const double eps = g.permittivity;
    switch (m) {
    case Method::A2D: {
        const EffectiveRadii R = effective_radii(g);
        const double Rp = (cfg.plane == SectionPlane::I) ? R.r_y : R.r_x;
        return cap_plane_cylinder(Rp, gap_mm, eps);
    }
    case Method::A3D: {
        semi_analytic::Rect lim = cfg.a3d_limits;
        if (!(lim.half_x > 0.0) || !(lim.half_y > 0.0))
            lim = semi_analytic::default_a3d_limits(g);
        return semi_analytic::cap3d_model_a(g, lim, cfg.quadrature);
    }
    case Method::B:
        return semi_analytic::cap2d_model_b(to_dimensionless(g, cfg.plane), eps, cfg.quadrature);
    case Method::C:
        return semi_analytic::cap2d_model_c(to_dimensionless(g, cfg.plane), eps, cfg.quadrature);
    case Method::D:
        return semi_analytic::cap2d_model_d(to_dimensionless(g, cfg.plane), eps, cfg.quadrature);
    case Method::E:
        return semi_analytic::cap3d_model_e(g, /*include_rim=*/true, cfg.quadrature);
    case Method::F:
        return analytic2d::capacitance_model_f(to_dimensionless(g, cfg.plane), eps);
    case Method::G: {
        const DimensionlessSection s = to_dimensionless(g, cfg.plane);
        if (cfg.fem.richardson)
            return fem2d::convergence_study(s, std::max(2, cfg.fem.refinement), eps).extrapolated;
        return fem2d::solve(fem2d::generate_mesh(s, cfg.fem.refinement), eps).capacitance;
    }
    }
    throw ConfigError("evaluate_method: unknown method");
}

SweepReport run_sweep(const SweepConfig& cfg, int jobs)
{
    SweepReport rep;
    rep.name = cfg.name;
    rep.gaps_um = cfg.grid.gaps_um();
    rep.methods = cfg.methods;
    if (std::find(rep.methods.begin(), rep.methods.end(), cfg.reference) == rep.methods.end())
        rep.methods.push_back(cfg.reference);
    rep.reference = cfg.reference;

    const int ng = static_cast<int>(rep.gaps_um.size());
    const int nm = static_cast<int>(rep.methods.size());
    rep.values.assign(ng, std::vector<SweepCell>(nm));

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int cell = next.fetch_add(1);
            if (cell >= ng * nm)
                return;
            const int gi = cell / nm;
            const int mi = cell % nm;
            SweepCell& out = rep.values[gi][mi];
            try {
                out.value = evaluate_method(rep.methods[mi], cfg, rep.gaps_um[gi] * 1e-3);
                out.ok = true;
            } catch (const std::exception& e) {
                out.ok = false;
                out.error = e.what();
            }
        }
    };
    int n_threads = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    n_threads = std::clamp(n_threads, 1, ng * nm);
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    const int ref_idx = static_cast<int>(
        std::find(rep.methods.begin(), rep.methods.end(), rep.reference) - rep.methods.begin());
    const Units ref_units = units_of(rep.reference);
    rep.deviations.assign(ng, std::vector<double>(nm, nan_value));
    for (int gi = 0; gi < ng; ++gi) {
        const SweepCell& ref = rep.values[gi][ref_idx];
        if (!ref.ok || ref.value == 0.0)
            continue;
        for (int mi = 0; mi < nm; ++mi) {
            const SweepCell& c = rep.values[gi][mi];
            if (c.ok && units_of(rep.methods[mi]) == ref_units)
                rep.deviations[gi][mi] = (c.value - ref.value) / ref.value;
        }
    }
    return rep;
}

double aggregate_bearing(const BearingNetworkSpec& spec)
{
    if (spec.n_unloaded < 0 || spec.n_unloaded > spec.n_elements)
        throw ConfigError("aggregate_bearing: need 0 <= n_unloaded <= n_elements");
    double total = 0.0;
    if (spec.n_unloaded > 0) {
        if (spec.contact_inner == 0.0 || spec.contact_outer == 0.0)
            throw ZeroCapacitance("aggregate_bearing: series branch with a zero member");
        total += spec.n_unloaded *
                 (spec.contact_inner * spec.contact_outer /
                  (spec.contact_inner + spec.contact_outer));
    }
    for (double c : spec.loaded_extras)
        total += c;
    return total;
}

Table to_table(const SweepReport& report)
{
    Table t;
    t.name = report.name;
    t.columns.push_back("gap_um");
    for (Method m : report.methods)
        t.columns.push_back(to_string(m));
    for (Method m : report.methods)
        t.columns.push_back(std::string("dev_") + to_string(m) + "_vs_" +
                            to_string(report.reference));
    for (size_t gi = 0; gi < report.gaps_um.size(); ++gi) {
        std::vector<double> row;
        row.push_back(report.gaps_um[gi]);
        for (size_t mi = 0; mi < report.methods.size(); ++mi)
            row.push_back(report.values[gi][mi].ok ? report.values[gi][mi].value : nan_value);
        for (size_t mi = 0; mi < report.methods.size(); ++mi)
            row.push_back(report.deviations[gi][mi]);
        t.rows.push_back(std::move(row));
    }
    t.notes = report.notes;
    for (size_t gi = 0; gi < report.gaps_um.size(); ++gi)
        for (size_t mi = 0; mi < report.methods.size(); ++mi)
            if (!report.values[gi][mi].ok)
                t.notes.push_back("failed: gap " + std::to_string(report.gaps_um[gi]) + " um, " +
                                  to_string(report.methods[mi]) + ": " +
                                  report.values[gi][mi].error);
    return t;
}

std::string to_csv(const Table& table)
{
    std::ostringstream out;
    for (size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? "," : "") << table.columns[c];
    out << "\n";
    for (const auto& row : table.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c)
                out << ",";
            if (std::isnan(row[c]))
                out << "failed";
            else
                out << format_sci(row[c]);
        }
        out << "\n";
    }
    return out.str();
}

namespace {

void write_atomic(const std::filesystem::path& path, const std::string& content)
{
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw IoError("cannot open for writing: " + tmp.string());
        f << content;
        if (!f)
            throw IoError("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace

void emit(const Table& table, const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    write_atomic(dir / (table.name + ".csv"), to_csv(table));

    std::ostringstream sum;
    sum << table.name << ": " << table.rows.size() << " rows x " << table.columns.size()
        << " columns\ncolumns:";
    for (const auto& c : table.columns)
        sum << " " << c;
    sum << "\n";
    for (const auto& n : table.notes)
        sum << n << "\n";
    write_atomic(dir / (table.name + "_summary.txt"), sum.str());
}

void emit(const SweepReport& report, const std::filesystem::path& dir)
{
    emit(to_table(report), dir);
}

Table fig7_table(double rel_permittivity, const SweepGrid& grid)
{
    Table t;
    t.name = "fig7";
    t.columns = {"gap_um", "dev_Ry_inner", "dev_Ry_outer", "dev_Rx_inner", "dev_Rx_outer"};
    t.notes.push_back("signed deviation of the effective-radius closed form from the true "
                      "two-circle closed form, per section plane and ring");
    for (double s_um : grid.gaps_um()) {
        const double s = s_um * 1e-3;
        std::vector<double> row{s_um};
        for (auto [side, plane] :
             {std::pair{RingSide::Inner, SectionPlane::I}, {RingSide::Outer, SectionPlane::I},
              {RingSide::Inner, SectionPlane::II}, {RingSide::Outer, SectionPlane::II}}) {
            const BearingContactGeometry g = preset_6205_c3(side, s, rel_permittivity);
            const EffectiveRadii R = effective_radii(g);
            const double Rp = (plane == SectionPlane::I) ? R.r_y : R.r_x;
            const double c_eff = cap_plane_cylinder(Rp, s, g.permittivity);
            const double c_true = cap_true_pair(g, plane);
            row.push_back((c_eff - c_true) / c_true);
        }
        // reorder: Ry_i, Ry_o, Rx_i, Rx_o matches the loop order already
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table fig8_table(double rel_permittivity, const SweepGrid& grid)
{
    using namespace semi_analytic;
    Table t;
    t.name = "fig8";
    t.columns = {"gap_um",
                 "dev_eff_Ry_inner", "dev_eff_Ry_outer", "dev_eff_Rx_inner", "dev_eff_Rx_outer",
                 "dev_true_Ry_inner", "dev_true_Ry_outer", "dev_true_Rx_inner", "dev_true_Rx_outer"};
    t.notes.push_back("Taylor-height vs exact-height deviation, effective geometry (window "
                      "min(section, R)) and true geometry (section window)");
    const QuadratureSpec spec;
    for (double s_um : grid.gaps_um()) {
        const double s = s_um * 1e-3;
        std::vector<double> row{s_um};
        std::vector<double> true_devs;
        for (auto [side, plane] :
             {std::pair{RingSide::Inner, SectionPlane::I}, {RingSide::Outer, SectionPlane::I},
              {RingSide::Inner, SectionPlane::II}, {RingSide::Outer, SectionPlane::II}}) {
            const BearingContactGeometry g = preset_6205_c3(side, s, rel_permittivity);
            const EffectiveRadii R = effective_radii(g);
            const double Rp = (plane == SectionPlane::I) ? R.r_y : R.r_x;
            const double w_sec = (plane == SectionPlane::I) ? 0.5 * g.groove_width : g.ball_radius;
            const double w = std::min(w_sec, Rp);
            const double c_tay = cap2d_model_a(Rp, s, g.permittivity, HeightModel::Taylor, w, spec);
            const double c_ex = cap2d_model_a(Rp, s, g.permittivity, HeightModel::Exact, w, spec);
            row.push_back((c_tay - c_ex) / c_ex);

            const DimensionlessSection sec = to_dimensionless(g, plane);
            const double lim = (plane == SectionPlane::I) ? 0.5 * sec.beta : 1.0;
            const double c_true = cap2d_model_b(sec, g.permittivity, spec);
            const double c_tay_true =
                cap_profile(GapProfile::taylor_effective(Rp / g.ball_radius, sec.alpha), lim,
                            g.permittivity, spec);
            true_devs.push_back((c_tay_true - c_true) / c_true);
        }
        row.insert(row.end(), true_devs.begin(), true_devs.end());
        t.rows.push_back(std::move(row));
    }
    return t;
}

SweepConfig fig10_config(double rel_permittivity)
{
    SweepConfig cfg;
    cfg.name = "fig10";
    cfg.geometry = preset_6205_c3(RingSide::Outer, 1e-3, rel_permittivity);
    cfg.plane = SectionPlane::I;
    cfg.methods = {Method::A2D, Method::B, Method::C, Method::D, Method::G};
    cfg.reference = Method::F;
    return cfg;
}

Table fig11_table(double rel_permittivity, const SweepGrid& grid, const QuadratureSpec& spec)
{
    Table t;
    t.name = "fig11";
    t.columns = {"gap_um", "E_norim_inner_f", "E_inner_f", "E_norim_outer_f", "E_outer_f",
                 "rim_share_inner", "rim_share_outer"};
    t.notes.push_back("ball-surface integral capacitance without/with the rim band");
    for (double s_um : grid.gaps_um()) {
        const double s = s_um * 1e-3;
        std::vector<double> row{s_um};
        double shares[2] = {0, 0};
        int k = 0;
        for (RingSide side : {RingSide::Inner, RingSide::Outer}) {
            const BearingContactGeometry g = preset_6205_c3(side, s, rel_permittivity);
            const double c_norim = semi_analytic::cap3d_model_e(g, false, spec);
            const double c_rim = semi_analytic::cap3d_model_e(g, true, spec);
            row.push_back(c_norim);
            row.push_back(c_rim);
            shares[k++] = (c_rim - c_norim) / c_rim;
        }
        row.push_back(shares[0]);
        row.push_back(shares[1]);
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table fem_convergence_table(const SweepConfig& cfg, int n_max)
{
    const DimensionlessSection sec =
        to_dimensionless(cfg.geometry, cfg.plane);
    const fem2d::ConvergenceStudy study =
        fem2d::convergence_study(sec, n_max, cfg.geometry.permittivity);
    Table t;
    t.name = cfg.name + "_fem_convergence";
    t.columns = {"level", "elements", "capacitance_f_per_m", "deviation_vs_extrapolated"};
    for (const auto& row : study.rows)
        t.rows.push_back({double(row.level), double(row.elements), row.capacitance, row.deviation});
    std::ostringstream note;
    note << "extrapolated " << format_sci(study.extrapolated) << " F/m, observed order "
         << study.observed_order;
    t.notes.push_back(note.str());
    return t;
}

} // namespace racecap
