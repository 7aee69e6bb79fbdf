#pragma once

#include "racecap/sweep.hpp"

#include <filesystem>
#include <string>

namespace racecap {

/// JSON config: sections "geometry" (preset or explicit Table-1 fields),
/// "plane", "sweep", "methods", "reference", "quadrature", "fem",
/// "a3d_limits", "network". Throws ConfigError with the offending key.
SweepConfig load_sweep_config(const std::filesystem::path& file);

struct NetworkConfig {
    BearingContactGeometry geometry;
    int n_elements = 0;
    int n_unloaded = 0;
    double gap_um = 0.5;
    std::vector<double> loaded_extras; // F
};

NetworkConfig load_network_config(const std::filesystem::path& file);

/// Parses the geometry section shared by both config kinds.
BearingContactGeometry geometry_from_preset(const std::string& preset, RingSide side,
                                            double rel_permittivity);

} // namespace racecap
