#include "racecap/config.hpp"

#include "racecap/errors.hpp"

#include <json.hpp>

#include <fstream>

namespace racecap {

namespace {

using nlohmann::json;

json load_json(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        throw IoError("cannot open config: " + file.string());
    try {
        return json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::exception& e) {
        throw ConfigError("config parse error in " + file.string() + ": " + e.what());
    }
}

RingSide ring_from_string(const std::string& s)
{
    if (s == "inner")
        return RingSide::Inner;
    if (s == "outer")
        return RingSide::Outer;
    throw ConfigError("geometry.ring must be \"inner\" or \"outer\", got \"" + s + "\"");
}

BearingContactGeometry parse_geometry(const json& j)
{
    if (!j.is_object())
        throw ConfigError("geometry section must be an object");
    const RingSide side = ring_from_string(j.value("ring", "outer"));
    const double rel_eps = j.value("relative_permittivity", 1.0);
    if (j.contains("preset"))
        return geometry_from_preset(j.at("preset").get<std::string>(), side, rel_eps);
    try {
        return BearingContactGeometry::create(
            j.at("ball_radius_mm").get<double>(), j.at("groove_radius_mm").get<double>(),
            j.at("raceway_radius_mm").get<double>(), side, j.at("groove_width_mm").get<double>(),
            j.at("ring_width_mm").get<double>(),
            j.value("gap_mm", 1e-3), rel_eps * eps0);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("geometry section: ") + e.what());
    }
}

} // namespace

BearingContactGeometry geometry_from_preset(const std::string& preset, RingSide side,
                                            double rel_permittivity)
{
    if (preset == "bearing-6205-c3")
        return preset_6205_c3(side, 1e-3, rel_permittivity);
    throw ConfigError("unknown geometry preset \"" + preset + "\" (available: bearing-6205-c3)");
}

SweepConfig load_sweep_config(const std::filesystem::path& file)
{
    const json j = load_json(file);
    SweepConfig cfg;
    cfg.name = j.value("name", file.stem().string());
    if (!j.contains("geometry"))
        throw ConfigError("config needs a geometry section");
    cfg.geometry = parse_geometry(j.at("geometry"));

    const std::string plane = j.value("plane", "I");
    if (plane == "I")
        cfg.plane = SectionPlane::I;
    else if (plane == "II")
        cfg.plane = SectionPlane::II;
    else
        throw ConfigError("plane must be \"I\" or \"II\"");

    if (j.contains("sweep")) {
        const json& s = j.at("sweep");
        cfg.grid.min_um = s.value("min_um", cfg.grid.min_um);
        cfg.grid.max_um = s.value("max_um", cfg.grid.max_um);
        cfg.grid.points = s.value("points", cfg.grid.points);
        const std::string spacing = s.value("spacing", "log");
        if (spacing == "log")
            cfg.grid.log_spacing = true;
        else if (spacing == "linear")
            cfg.grid.log_spacing = false;
        else
            throw ConfigError("sweep.spacing must be \"log\" or \"linear\"");
    }

    if (j.contains("methods")) {
        for (const auto& m : j.at("methods")) {
            Method method;
            if (!method_from_string(m.get<std::string>(), method))
                throw ConfigError("unknown method \"" + m.get<std::string>() + "\"");
            cfg.methods.push_back(method);
        }
    } else {
        cfg.methods = {Method::A2D, Method::B, Method::C, Method::D, Method::F};
    }
    if (j.contains("reference")) {
        if (!method_from_string(j.at("reference").get<std::string>(), cfg.reference))
            throw ConfigError("unknown reference method");
    }

    if (j.contains("quadrature")) {
        const json& q = j.at("quadrature");
        cfg.quadrature.rel_tol = q.value("rel_tol", cfg.quadrature.rel_tol);
        cfg.quadrature.abs_tol = q.value("abs_tol", cfg.quadrature.abs_tol);
        cfg.quadrature.max_subdivisions =
            q.value("max_subdivisions", cfg.quadrature.max_subdivisions);
    }
    if (j.contains("fem")) {
        cfg.fem.refinement = j.at("fem").value("refinement", cfg.fem.refinement);
        cfg.fem.richardson = j.at("fem").value("richardson", cfg.fem.richardson);
    }
    if (j.contains("a3d_limits")) {
        cfg.a3d_limits.half_x = j.at("a3d_limits").value("half_x_mm", 0.0);
        cfg.a3d_limits.half_y = j.at("a3d_limits").value("half_y_mm", 0.0);
    }
    return cfg;
}

NetworkConfig load_network_config(const std::filesystem::path& file)
{
    const json j = load_json(file);
    NetworkConfig cfg;
    if (!j.contains("geometry"))
        throw ConfigError("config needs a geometry section");
    cfg.geometry = parse_geometry(j.at("geometry"));
    if (!j.contains("network"))
        throw ConfigError("bearing-total config needs a network section");
    const json& n = j.at("network");
    cfg.n_elements = n.value("elements", 0);
    cfg.n_unloaded = n.value("unloaded", 0);
    cfg.gap_um = n.value("gap_um", 0.5);
    if (n.contains("loaded_capacitances_pf"))
        for (const auto& v : n.at("loaded_capacitances_pf"))
            cfg.loaded_extras.push_back(v.get<double>() * 1e-12);
    return cfg;
}

} // namespace racecap
