#pragma once

#include <optional>

#include "looplight/params.hpp"
#include "looplight/liouvillian.hpp"

namespace looplight {

/// Propagation observables in the dilute-medium expansion n = 1 + chi/2.
/// Lpi is absent (DegenerateResponse) when Re chi3Scaled vanishes. Length
/// conventions: linearAbsorptionLength = lambda/(2pi |Im chi1|) as named, with
/// the corresponding field-amplitude 1/e length twice that value; same for
/// the nonlinear length. Sign flags are true for absorption (Im > 0).
struct PropagationReport {
    double n2I = 0.0;                 ///< intensity-dependent index change
    double phasePerMeter = 0.0;       ///< rad/m of nonlinear self-phase
    std::optional<double> Lpi;        ///< m, pi self-phase modulation length
    std::optional<double> linearAbsorptionLength;    ///< m
    std::optional<double> nonlinearGainLength;       ///< m
    std::optional<double> linearFieldAmplitudeLength;    ///< 2x the above
    std::optional<double> nonlinearFieldAmplitudeLength;
    bool linearAbsorptive = false;     ///< Im chi1 > 0
    bool nonlinearAbsorptive = false;  ///< Im chi3Scaled > 0
};

/// chi values must be in absolute (SI, dimensionless) units, not the plot
/// normalization.
PropagationReport selfphase_report(Complex chi1, Complex chi3Scaled,
                                   const MediumParams& m);

/// Accumulated nonlinear phase n2 I k L after length L.
double phase_after_length(const PropagationReport& report, double lengthM);

}  // namespace looplight
