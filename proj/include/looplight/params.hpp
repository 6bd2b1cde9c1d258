#pragma once

#include <stdexcept>

namespace looplight {

/// Driven-atom configuration of the four-level double-Lambda system.
/// Levels 1,2 are ground, 3,4 are excited; dipole transitions 3-1, 3-2,
/// 4-1 (probe), 4-2. All frequencies are angular (rad/s); phases in rad.
struct SystemParams {
    double omega31 = 0.0;  ///< control Rabi magnitude, 3-1
    double omega32 = 0.0;  ///< control Rabi magnitude, 3-2
    double omega42 = 0.0;  ///< control Rabi magnitude, 4-2

    double phi31 = 0.0;  ///< dipole phases
    double phi32 = 0.0;
    double phi42 = 0.0;
    double phi41 = 0.0;

    double delta31 = 0.0;  ///< laser detunings from the respective transition
    double delta32 = 0.0;
    double delta42 = 0.0;
    double delta41 = 0.0;

    double gamma31 = 0.0;  ///< radiative decay rates per channel
    double gamma32 = 0.0;
    double gamma41 = 0.0;
    double gamma42 = 0.0;

    double gammaC = 0.0;  ///< collisional dephasing on every coherence

    /// Signed sum of detunings around the interaction loop. Zero is the
    /// multiphoton resonance condition under which a true steady state exists.
    double multiphotonDetuning() const {
        return delta41 + delta32 - delta31 - delta42;
    }

    /// Matching signed combination of the dipole phases.
    double loopPhase() const { return phi41 + phi32 - phi31 - phi42; }

    /// Throws std::invalid_argument on out-of-domain values.
    void validate() const;
};

/// Probe field strength, either given directly or as a fraction of the
/// weakest positive control field (a control that is off does not count).
struct ProbeSpec {
    double omega41 = 0.0;          ///< rad/s, used when relativeStrength < 0
    double relativeStrength = -1;  ///< set >= 0 to derive omega41

    static ProbeSpec relative(double frac = 0.1) {
        ProbeSpec p;
        p.relativeStrength = frac;
        return p;
    }
    static ProbeSpec absolute(double rabi) {
        ProbeSpec p;
        p.omega41 = rabi;
        return p;
    }

    /// Resolved probe Rabi magnitude for a given control configuration.
    double resolve(const SystemParams& p) const;
};

/// Direction cosine of each field's propagation axis relative to the probe
/// axis. +1 co-propagating, 0 perpendicular, -1 counter-propagating.
/// The probe itself defines the axis and is pinned to +1.
struct FieldGeometry {
    double dir31 = 1.0;
    double dir32 = 1.0;
    double dir42 = 1.0;
    static constexpr double dir41 = 1.0;
};

/// Gas-cell medium: density, probe wavelength, thermal and collisional data.
struct MediumParams {
    double density = 0.0;              ///< active-atom number density N, m^-3
    double lambda41 = 0.0;             ///< probe transition wavelength, m
    double temperature = 0.0;          ///< K
    double atomMass = 0.0;             ///< kg
    double selfCollisionConst = 0.0;   ///< C_s, m^3/s
    double bufferCollisionConst = 0.0; ///< C_b, m^3/s
    double bufferDensity = 0.0;        ///< N_b, m^-3
    FieldGeometry fieldDirections;

    double probeWavenumber() const;

    void validate() const;
};

// Derived single-transition quantities.

/// Dipole moment from the radiative rate of the probe transition via the
/// Weisskopf-Wigner relation gamma = w^3 d^2 / (3 pi eps0 hbar c^3). C*m.
double dipole_moment_from_decay(double gamma41, double lambda41);

/// Probe intensity for a given Rabi magnitude, I = eps0 c E^2 / 2 with
/// E = hbar Omega / d. W/m^2.
double probe_intensity(double omega41, double d41);

/// Inverse of probe_intensity: Rabi magnitude from intensity.
double rabi_from_intensity(double intensity, double d41, double lambda41_unused = 0);

}  // namespace looplight
