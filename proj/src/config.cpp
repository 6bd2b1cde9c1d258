#include "looplight/config.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

namespace looplight {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw ConfigError("unknown key \"" + it.key() + "\" in " + where);
}

double num(const json& obj, const std::string& key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) throw ConfigError("\"" + key + "\" must be a number");
    return obj[key].get<double>();
}

double required_num(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) throw ConfigError("missing \"" + key + "\" in " + where);
    if (!obj[key].is_number()) throw ConfigError("\"" + key + "\" must be a number");
    return obj[key].get<double>();
}

}  // namespace

const MediumParams& ModelConfig::requireMedium() const {
    if (!medium) throw ConfigError("this mode needs a \"medium\" section in the config");
    return *medium;
}

ModelConfig parse_config(const std::string& jsonText) {
    json root;
    try {
        root = json::parse(jsonText);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config root must be an object");
    reject_unknown(root, {"units", "system", "probe", "medium"}, "config root");

    ModelConfig cfg;
    if (!root.contains("units") || !root["units"].is_string())
        throw ConfigError("config needs \"units\": \"gamma\" or \"si\"");
    const std::string units = root["units"].get<std::string>();
    if (units == "gamma")
        cfg.gammaUnits = true;
    else if (units == "si")
        cfg.gammaUnits = false;
    else
        throw ConfigError("\"units\" must be \"gamma\" or \"si\"");

    if (!root.contains("system") || !root["system"].is_object())
        throw ConfigError("config needs a \"system\" object");
    const json& sys = root["system"];
    reject_unknown(sys,
                   {"omega31", "omega32", "omega42", "phi31", "phi32", "phi42", "phi41",
                    "delta31", "delta32", "delta42", "delta41", "gamma31", "gamma32",
                    "gamma41", "gamma42", "gammaC"},
                   "\"system\"");
    SystemParams& p = cfg.system;
    p.omega31 = num(sys, "omega31", 0.0);
    p.omega32 = num(sys, "omega32", 0.0);
    p.omega42 = num(sys, "omega42", 0.0);
    p.phi31 = num(sys, "phi31", 0.0);
    p.phi32 = num(sys, "phi32", 0.0);
    p.phi42 = num(sys, "phi42", 0.0);
    p.phi41 = num(sys, "phi41", 0.0);
    p.delta31 = num(sys, "delta31", 0.0);
    p.delta32 = num(sys, "delta32", 0.0);
    p.delta42 = num(sys, "delta42", 0.0);
    p.delta41 = num(sys, "delta41", 0.0);
    // In gamma units the natural linewidth is the unit itself.
    const double gammaDefault = cfg.gammaUnits ? 1.0 : 0.0;
    p.gamma31 = cfg.gammaUnits ? num(sys, "gamma31", gammaDefault)
                               : required_num(sys, "gamma31", "\"system\" (si units)");
    p.gamma32 = cfg.gammaUnits ? num(sys, "gamma32", gammaDefault)
                               : required_num(sys, "gamma32", "\"system\" (si units)");
    p.gamma41 = cfg.gammaUnits ? num(sys, "gamma41", gammaDefault)
                               : required_num(sys, "gamma41", "\"system\" (si units)");
    p.gamma42 = cfg.gammaUnits ? num(sys, "gamma42", gammaDefault)
                               : required_num(sys, "gamma42", "\"system\" (si units)");
    p.gammaC = num(sys, "gammaC", 0.0);
    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid \"system\": ") + e.what());
    }

    if (root.contains("probe")) {
        if (!root["probe"].is_object()) throw ConfigError("\"probe\" must be an object");
        const json& pr = root["probe"];
        reject_unknown(pr, {"omega41", "relativeStrength"}, "\"probe\"");
        if (pr.contains("omega41") && pr.contains("relativeStrength"))
            throw ConfigError("\"probe\" takes omega41 or relativeStrength, not both");
        if (pr.contains("omega41"))
            cfg.probe = ProbeSpec::absolute(required_num(pr, "omega41", "\"probe\""));
        else
            cfg.probe = ProbeSpec::relative(num(pr, "relativeStrength", 0.1));
    } else {
        cfg.probe = ProbeSpec::relative(0.1);
    }

    if (root.contains("medium")) {
        if (!root["medium"].is_object()) throw ConfigError("\"medium\" must be an object");
        const json& med = root["medium"];
        reject_unknown(med,
                       {"density", "lambda41", "temperature", "atomMass",
                        "selfCollisionConst", "bufferCollisionConst", "bufferDensity",
                        "fieldDirections"},
                       "\"medium\"");
        MediumParams m;
        m.density = required_num(med, "density", "\"medium\"");
        m.lambda41 = required_num(med, "lambda41", "\"medium\"");
        m.temperature = required_num(med, "temperature", "\"medium\"");
        m.atomMass = required_num(med, "atomMass", "\"medium\"");
        m.selfCollisionConst = num(med, "selfCollisionConst", 0.0);
        m.bufferCollisionConst = num(med, "bufferCollisionConst", 0.0);
        m.bufferDensity = num(med, "bufferDensity", 0.0);
        if (med.contains("fieldDirections")) {
            const json& fd = med["fieldDirections"];
            if (!fd.is_object()) throw ConfigError("\"fieldDirections\" must be an object");
            reject_unknown(fd, {"dir31", "dir32", "dir42"}, "\"fieldDirections\"");
            m.fieldDirections.dir31 = num(fd, "dir31", 1.0);
            m.fieldDirections.dir32 = num(fd, "dir32", 1.0);
            m.fieldDirections.dir42 = num(fd, "dir42", 1.0);
        }
        try {
            m.validate();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("invalid \"medium\": ") + e.what());
        }
        cfg.medium = m;
    }
    return cfg;
}

ModelConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_config(text);
}

}  // namespace looplight
