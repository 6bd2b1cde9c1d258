#pragma once

#include <string>
#include <vector>

#include "looplight/config.hpp"

namespace looplight {

/// One of the published-figure parameter sets, with the natural grid and
/// scan type for that figure.
struct Preset {
    std::string name;
    ModelConfig model;
    double gridStart = 0.0;   ///< in the preset's input units (gamma or rad/s)
    double gridStop = 0.0;
    int gridPoints = 0;
    bool dopplerAveraged = false;  ///< thermal average (fig4 family)
    double velocityScale = 1.0;    ///< fraction of the thermal vm to use
};

/// Names: fig2, fig3a..fig3d, fig4a..fig4d.
/// The fig4 family uses the 2pi reading of the caption's "GHz" values
/// (omega = 2pi * value), the convention fixed by the L_pi calibration.
Preset figure_preset(const std::string& name);

std::vector<std::string> preset_names();

/// Conversion adopted for the fig4 caption values, rad/s per "GHz".
double fig4_caption_unit();

}  // namespace looplight
