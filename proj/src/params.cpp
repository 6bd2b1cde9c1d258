#include "looplight/params.hpp"

#include <cmath>
#include <limits>

#include "looplight/constants.hpp"

namespace looplight {

void SystemParams::validate() const {
    if (omega31 < 0 || omega32 < 0 || omega42 < 0)
        throw std::invalid_argument("Rabi magnitudes must be nonnegative");
    if (gamma31 <= 0 || gamma32 <= 0 || gamma41 <= 0 || gamma42 <= 0)
        throw std::invalid_argument("decay rates must be positive");
    if (gammaC < 0)
        throw std::invalid_argument("gammaC must be nonnegative");
    for (double v : {omega31, omega32, omega42, phi31, phi32, phi42, phi41,
                     delta31, delta32, delta42, delta41, gamma31, gamma32,
                     gamma41, gamma42, gammaC}) {
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite parameter");
    }
}

double ProbeSpec::resolve(const SystemParams& p) const {
    if (relativeStrength < 0) {
        if (omega41 < 0) throw std::invalid_argument("probe Rabi must be nonnegative");
        return omega41;
    }
    // Weakest switched-on control; a field that is off is not a field.
    double weakest = std::numeric_limits<double>::infinity();
    for (double w : {p.omega31, p.omega32, p.omega42})
        if (w > 0 && w < weakest) weakest = w;
    if (!std::isfinite(weakest))
        throw std::invalid_argument("relative probe strength needs at least one control field");
    return relativeStrength * weakest;
}

double MediumParams::probeWavenumber() const { return 2.0 * M_PI / lambda41; }

void MediumParams::validate() const {
    if (density <= 0 || temperature <= 0 || atomMass <= 0 || lambda41 <= 0)
        throw std::invalid_argument("density, temperature, mass, wavelength must be positive");
    if (selfCollisionConst < 0 || bufferCollisionConst < 0 || bufferDensity < 0)
        throw std::invalid_argument("collision constants and buffer density must be nonnegative");
    for (double d : {fieldDirections.dir31, fieldDirections.dir32, fieldDirections.dir42}) {
        if (!(d >= -1.0 && d <= 1.0))
            throw std::invalid_argument("direction cosines must lie in [-1, 1]");
    }
}

double dipole_moment_from_decay(double gamma41, double lambda41) {
    if (gamma41 <= 0 || lambda41 <= 0)
        throw std::invalid_argument("dipole_moment_from_decay needs positive inputs");
    using namespace constants;
    const double omega = 2.0 * M_PI * cLight / lambda41;
    return std::sqrt(3.0 * M_PI * eps0 * hbar * cLight * cLight * cLight * gamma41 /
                     (omega * omega * omega));
}

double probe_intensity(double omega41, double d41) {
    using namespace constants;
    const double field = hbar * omega41 / d41;
    return 0.5 * eps0 * cLight * field * field;
}

double rabi_from_intensity(double intensity, double d41, double) {
    using namespace constants;
    const double field = std::sqrt(2.0 * intensity / (eps0 * cLight));
    return field * d41 / hbar;
}

}  // namespace looplight
