#include "looplight/presets.hpp"

#include <cmath>

#include "looplight/constants.hpp"

namespace looplight {

namespace {

// Natural-linewidth and caption-value conversions for the sodium cell runs.
constexpr double kSodiumGamma = 2.0 * M_PI * 9.76e6;   // rad/s
constexpr double kCaptionGHz = 2.0 * M_PI * 1e9;       // rad/s per quoted GHz
constexpr double kSodiumMassU = 22.98976928;
constexpr double kFullDopplerFwhm = 2.0 * M_PI * 1.78e9;

MediumParams gamma_mode_placeholder() {
    // Arbitrary valid medium; the plot normalization cancels it exactly.
    MediumParams m;
    m.density = 1.0;
    m.lambda41 = 1.0;
    m.temperature = 1.0;
    m.atomMass = 1.0;
    return m;
}

MediumParams sodium_argon_cell() {
    MediumParams m;
    m.density = 1.0e20;
    m.lambda41 = 589.2e-9;
    m.temperature = 547.6;
    m.atomMass = kSodiumMassU * constants::atomicMassUnit;
    m.selfCollisionConst = 1.50e-13;
    m.bufferCollisionConst = 2.53e-15;
    m.bufferDensity = 3.95e23;
    return m;
}

Preset splitting_preset() {
    Preset ps;
    ps.name = "fig2";
    ps.model.gammaUnits = true;
    SystemParams& p = ps.model.system;
    p.omega42 = 100.0;
    p.omega31 = 50.0;
    p.omega32 = 0.0;
    p.gamma31 = p.gamma32 = p.gamma41 = p.gamma42 = 1.0;
    ps.model.probe = ProbeSpec::relative(0.1);
    ps.model.medium = gamma_mode_placeholder();
    ps.gridStart = -120.0;
    ps.gridStop = 120.0;
    ps.gridPoints = 2401;
    return ps;
}

Preset detuned_resonance_preset(char variant) {
    Preset ps;
    ps.name = std::string("fig3") + variant;
    ps.model.gammaUnits = true;
    SystemParams& p = ps.model.system;
    p.omega31 = 50.0;
    p.omega32 = 34.0;
    p.omega42 = 100.0;
    p.gamma31 = p.gamma32 = p.gamma41 = p.gamma42 = 1.0;
    switch (variant) {
        case 'a': p.delta31 = 0.0; break;
        case 'b': p.delta31 = 0.7; break;
        case 'c': p.delta31 = 1.5; break;
        case 'd': p.delta31 = 1.7; break;
        default: throw std::invalid_argument("unknown fig3 variant");
    }
    ps.model.probe = ProbeSpec::relative(0.1);
    ps.model.medium = gamma_mode_placeholder();
    ps.gridStart = -40.0;
    ps.gridStop = -10.0;
    ps.gridPoints = 601;
    return ps;
}

Preset doppler_preset(char variant) {
    Preset ps;
    ps.name = std::string("fig4") + variant;
    ps.model.gammaUnits = false;
    SystemParams& p = ps.model.system;
    p.omega42 = 60.0 * kCaptionGHz;
    p.omega31 = 30.0 * kCaptionGHz;
    p.omega32 = 25.0 * kCaptionGHz;
    p.delta31 = 1.6 * kCaptionGHz;
    p.gamma31 = p.gamma32 = p.gamma41 = p.gamma42 = kSodiumGamma;
    ps.model.probe = ProbeSpec::relative(0.1);
    ps.model.medium = sodium_argon_cell();
    ps.dopplerAveraged = true;
    // Doppler width as a fraction of the full 2pi x 1.78 GHz; (a) sits below
    // the natural linewidth.
    switch (variant) {
        case 'a': ps.velocityScale = 0.5 * kSodiumGamma / kFullDopplerFwhm; break;
        case 'b': ps.velocityScale = 0.5; break;
        case 'c': ps.velocityScale = 0.9; break;
        case 'd': ps.velocityScale = 1.0; break;
        default: throw std::invalid_argument("unknown fig4 variant");
    }
    ps.gridStart = -22.0 * kCaptionGHz;
    ps.gridStop = -8.0 * kCaptionGHz;
    ps.gridPoints = 561;
    return ps;
}

}  // namespace

Preset figure_preset(const std::string& name) {
    if (name == "fig2") return splitting_preset();
    if (name.rfind("fig3", 0) == 0 && name.size() == 5) return detuned_resonance_preset(name[4]);
    if (name.rfind("fig4", 0) == 0 && name.size() == 5) return doppler_preset(name[4]);
    throw std::invalid_argument("unknown preset \"" + name + "\"");
}

std::vector<std::string> preset_names() {
    return {"fig2",  "fig3a", "fig3b", "fig3c", "fig3d",
            "fig4a", "fig4b", "fig4c", "fig4d"};
}

double fig4_caption_unit() { return kCaptionGHz; }

}  // namespace looplight
