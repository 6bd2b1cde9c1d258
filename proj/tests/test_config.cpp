#include <doctest.h>

#include "looplight/config.hpp"
#include "looplight/presets.hpp"

using namespace looplight;

TEST_CASE("minimal gamma-units config") {
    const ModelConfig cfg = parse_config(R"({
        "units": "gamma",
        "system": {"omega31": 50, "omega42": 100, "delta31": 0.7}
    })");
    CHECK(cfg.gammaUnits);
    CHECK(cfg.system.omega31 == 50.0);
    CHECK(cfg.system.gamma31 == 1.0);  // natural-linewidth default
    CHECK(cfg.system.gammaC == 0.0);
    CHECK(cfg.probe.resolve(cfg.system) == doctest::Approx(5.0));
    CHECK_FALSE(cfg.medium.has_value());
    CHECK_THROWS_AS(cfg.requireMedium(), ConfigError);
}

TEST_CASE("si config with medium") {
    const ModelConfig cfg = parse_config(R"({
        "units": "si",
        "system": {"omega31": 1.9e11, "omega32": 1.6e11, "omega42": 3.8e11,
                   "delta31": 1.0e10,
                   "gamma31": 6.1e7, "gamma32": 6.1e7, "gamma41": 6.1e7, "gamma42": 6.1e7},
        "probe": {"relativeStrength": 0.1},
        "medium": {"density": 1e20, "lambda41": 589.2e-9, "temperature": 547.6,
                   "atomMass": 3.817e-26, "selfCollisionConst": 1.5e-13,
                   "bufferCollisionConst": 2.53e-15, "bufferDensity": 3.95e23,
                   "fieldDirections": {"dir31": 1, "dir32": 1, "dir42": -1}}
    })");
    CHECK_FALSE(cfg.gammaUnits);
    CHECK(cfg.requireMedium().bufferDensity == 3.95e23);
    CHECK(cfg.requireMedium().fieldDirections.dir42 == -1.0);
}

TEST_CASE("unknown keys are rejected everywhere") {
    CHECK_THROWS_AS(parse_config(R"({"units": "gamma", "system": {}, "extra": 1})"),
                    ConfigError);
    CHECK_THROWS_AS(
        parse_config(R"({"units": "gamma", "system": {"omega99": 1}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({
        "units": "si",
        "system": {"gamma31": 1, "gamma32": 1, "gamma41": 1, "gamma42": 1},
        "medium": {"density": 1, "lambda41": 1, "temperature": 1, "atomMass": 1,
                   "pressure": 2}})"),
                    ConfigError);
}

TEST_CASE("schema violations") {
    CHECK_THROWS_AS(parse_config("not json"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"system": {}})"), ConfigError);  // no units
    CHECK_THROWS_AS(parse_config(R"({"units": "au", "system": {}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"units": "gamma"})"), ConfigError);  // no system
    CHECK_THROWS_AS(parse_config(R"({"units": "gamma", "system": {"omega31": "x"}})"),
                    ConfigError);
    // si units require explicit decay rates
    CHECK_THROWS_AS(parse_config(R"({"units": "si", "system": {"omega31": 1e10}})"),
                    ConfigError);
    // probe must not give both forms
    CHECK_THROWS_AS(parse_config(R"({
        "units": "gamma", "system": {"omega31": 10},
        "probe": {"omega41": 1, "relativeStrength": 0.1}})"),
                    ConfigError);
    // negative decay rate caught by validation
    CHECK_THROWS_AS(parse_config(R"({
        "units": "gamma", "system": {"gamma31": -1}})"),
                    ConfigError);
}

TEST_CASE("figure presets resolve") {
    for (const std::string& name : preset_names()) {
        const Preset ps = figure_preset(name);
        CHECK(ps.name == name);
        CHECK(ps.gridPoints >= 2);
        CHECK_NOTHROW(ps.model.system.validate());
        if (name.rfind("fig4", 0) == 0) {
            CHECK(ps.dopplerAveraged);
            CHECK_FALSE(ps.model.gammaUnits);
            CHECK(ps.model.requireMedium().bufferDensity > 0);
        } else {
            CHECK(ps.model.gammaUnits);
        }
    }
    CHECK_THROWS_AS(figure_preset("fig9z"), std::invalid_argument);

    // The splitting preset carries the exact strong-control configuration.
    const Preset fig2 = figure_preset("fig2");
    CHECK(fig2.model.system.omega42 == 100.0);
    CHECK(fig2.model.system.omega31 == 50.0);
    CHECK(fig2.model.system.omega32 == 0.0);

    const Preset fig4d = figure_preset("fig4d");
    CHECK(fig4d.model.system.omega42 ==
          doctest::Approx(60.0 * fig4_caption_unit()));
    CHECK(fig4d.velocityScale == 1.0);
}
