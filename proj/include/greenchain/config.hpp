#pragma once

#include "greenchain/chain.hpp"
#include "greenchain/greens.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace greenchain {

struct OscillatorConfig {
    std::optional<double> box_length; ///< defaults to the span of the wall positions
    std::optional<double> center;     ///< defaults to box_length / 2

    bool operator==(const OscillatorConfig&) const = default;
};

/// JSON description of a chain:
///
///   {
///     "geometry": "rectangular" | "cylindrical" | "spherical" | "oscillator",
///     "mode": 0,                       // azimuthal m or angular l (radial geometries)
///     "positions": [0.0, 1.0],
///     "couplings": [1.0, 1.0] | "infinite",   // raw strengths mu_j
///     "units": {"hbar": 1, "mass": 1, "omega0": 1},
///     "oscillator": {"box_length": 1.0, "center": 0.5}
///   }
///
/// Unknown keys are rejected.
struct ChainConfig {
    Geometry geometry = Geometry::rectangular;
    std::optional<int> mode;
    std::vector<double> positions;
    std::optional<std::vector<double>> couplings; ///< nullopt means "infinite"
    UnitSystem units;
    std::optional<OscillatorConfig> oscillator;

    bool operator==(const ChainConfig&) const = default;
};

/// Throws ConfigError on malformed input.
ChainConfig parse_chain_config(std::string_view json_text);
ChainConfig load_chain_config(const std::filesystem::path& path);
std::string to_json(const ChainConfig& config);

struct ChainSetup {
    DeltaChain chain;
    FreeGreens g0;
};

/// Validates the configuration into a chain and its free Green's function.
/// Domain violations are reported as ConfigError.
ChainSetup build_chain(const ChainConfig& config);

} // namespace greenchain
