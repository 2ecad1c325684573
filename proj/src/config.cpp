#include "greenchain/config.hpp"

#include "greenchain/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <sstream>

namespace greenchain {

namespace {

using nlohmann::json;

void reject_unknown(const json& object, std::initializer_list<std::string_view> allowed,
                    std::string_view where)
{
    for (const auto& [key, _] : object.items()) {
        bool known = false;
        for (auto name : allowed) {
            known = known || key == name;
        }
        if (!known) {
            throw ConfigError("unknown field '" + key + "' in " + std::string(where));
        }
    }
}

double number(const json& value, std::string_view what)
{
    if (!value.is_number()) {
        throw ConfigError(std::string(what) + " must be a number");
    }
    return value.get<double>();
}

bool is_infinite_marker(const json& value)
{
    return value.is_string() && value.get<std::string>() == "infinite";
}

} // namespace

ChainConfig parse_chain_config(std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("configuration must be a JSON object");
    }
    reject_unknown(doc, {"geometry", "mode", "positions", "couplings", "units", "oscillator"},
                   "configuration");

    ChainConfig cfg;
    if (!doc.contains("geometry") || !doc["geometry"].is_string()) {
        throw ConfigError("'geometry' is required and must be a string");
    }
    cfg.geometry = parse_geometry(doc["geometry"].get<std::string>());
    if (cfg.geometry == Geometry::custom) {
        throw ConfigError("custom geometries cannot be described by a configuration file");
    }

    if (doc.contains("mode")) {
        if (!doc["mode"].is_number_integer() || doc["mode"].get<int>() < 0) {
            throw ConfigError("'mode' must be a non-negative integer");
        }
        cfg.mode = doc["mode"].get<int>();
    }

    if (!doc.contains("positions") || !doc["positions"].is_array()) {
        throw ConfigError("'positions' is required and must be an array");
    }
    for (const auto& p : doc["positions"]) {
        cfg.positions.push_back(number(p, "every position"));
    }

    if (!doc.contains("couplings")) {
        throw ConfigError("'couplings' is required");
    }
    const auto& couplings = doc["couplings"];
    if (is_infinite_marker(couplings)) {
        cfg.couplings.reset();
    } else if (couplings.is_array()) {
        std::size_t markers = 0;
        std::vector<double> values;
        for (const auto& c : couplings) {
            if (is_infinite_marker(c)) {
                ++markers;
            } else {
                values.push_back(number(c, "every coupling"));
            }
        }
        if (markers > 0 && markers != couplings.size()) {
            throw ConfigError("mixed finite and infinite couplings are not supported");
        }
        if (markers > 0) {
            cfg.couplings.reset();
        } else {
            cfg.couplings = std::move(values);
        }
    } else {
        throw ConfigError("'couplings' must be an array of numbers or \"infinite\"");
    }

    if (doc.contains("units")) {
        const auto& u = doc["units"];
        if (!u.is_object()) {
            throw ConfigError("'units' must be an object");
        }
        reject_unknown(u, {"hbar", "mass", "omega0"}, "units");
        if (u.contains("hbar")) cfg.units.hbar = number(u["hbar"], "units.hbar");
        if (u.contains("mass")) cfg.units.mass = number(u["mass"], "units.mass");
        if (u.contains("omega0")) cfg.units.omega0 = number(u["omega0"], "units.omega0");
    }

    if (doc.contains("oscillator")) {
        const auto& o = doc["oscillator"];
        if (!o.is_object()) {
            throw ConfigError("'oscillator' must be an object");
        }
        reject_unknown(o, {"box_length", "center"}, "oscillator");
        OscillatorConfig osc;
        if (o.contains("box_length")) osc.box_length = number(o["box_length"], "oscillator.box_length");
        if (o.contains("center")) osc.center = number(o["center"], "oscillator.center");
        cfg.oscillator = osc;
    }
    return cfg;
}

ChainConfig load_chain_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open configuration file '" + path.string() + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_chain_config(text.str());
}

std::string to_json(const ChainConfig& config)
{
    json doc;
    doc["geometry"] = std::string(to_string(config.geometry));
    if (config.mode) {
        doc["mode"] = *config.mode;
    }
    doc["positions"] = config.positions;
    if (config.couplings) {
        doc["couplings"] = *config.couplings;
    } else {
        doc["couplings"] = "infinite";
    }
    doc["units"] = {{"hbar", config.units.hbar},
                    {"mass", config.units.mass},
                    {"omega0", config.units.omega0}};
    if (config.oscillator) {
        json o = json::object();
        if (config.oscillator->box_length) o["box_length"] = *config.oscillator->box_length;
        if (config.oscillator->center) o["center"] = *config.oscillator->center;
        doc["oscillator"] = o;
    }
    return doc.dump(2);
}

ChainSetup build_chain(const ChainConfig& config)
{
    const bool radial =
        config.geometry == Geometry::cylindrical || config.geometry == Geometry::spherical;
    if (config.mode && !radial) {
        throw ConfigError("'mode' only applies to cylindrical and spherical geometries");
    }
    if (config.oscillator && config.geometry != Geometry::oscillator) {
        throw ConfigError("'oscillator' block given for a non-oscillator geometry");
    }
    try {
        auto chain = config.couplings
                         ? DeltaChain::finite(config.geometry, config.positions, *config.couplings,
                                              config.units)
                         : DeltaChain::impenetrable(config.geometry, config.positions, config.units);
        const int mode = config.mode.value_or(0);
        switch (config.geometry) {
        case Geometry::rectangular:
            return {std::move(chain), FreeGreens::rectangular()};
        case Geometry::cylindrical:
            return {std::move(chain), FreeGreens::cylindrical(mode)};
        case Geometry::spherical:
            return {std::move(chain), FreeGreens::spherical(mode)};
        case Geometry::oscillator: {
            const OscillatorConfig osc = config.oscillator.value_or(OscillatorConfig{});
            const double box = osc.box_length.value_or(config.positions.back() -
                                                       config.positions.front());
            const double center = osc.center.value_or(0.5 * box);
            return {std::move(chain), FreeGreens::oscillator(config.units, center)};
        }
        case Geometry::custom:
            break;
        }
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    throw ConfigError("unsupported geometry in configuration");
}

} // namespace greenchain
