#include "looplight/propagation.hpp"

#include <cmath>

namespace looplight {

PropagationReport selfphase_report(Complex chi1, Complex chi3Scaled,
                                   const MediumParams& m) {
    PropagationReport out;
    const double k = m.probeWavenumber();

    out.n2I = 0.5 * chi3Scaled.real();
    out.phasePerMeter = k * out.n2I;
    out.linearAbsorptive = chi1.imag() > 0;
    out.nonlinearAbsorptive = chi3Scaled.imag() > 0;

    // Degenerate nonlinear response: no finite pi length.
    const double tol = 1e-12 * std::abs(chi3Scaled);
    if (std::abs(chi3Scaled.real()) > tol && chi3Scaled.real() != 0.0)
        out.Lpi = M_PI / std::abs(out.phasePerMeter);

    auto charLength = [&](double imChi) -> std::optional<double> {
        if (imChi == 0.0) return std::nullopt;
        return m.lambda41 / (2.0 * M_PI * std::abs(imChi));
    };
    out.linearAbsorptionLength = charLength(chi1.imag());
    out.nonlinearGainLength = charLength(chi3Scaled.imag());
    if (out.linearAbsorptionLength)
        out.linearFieldAmplitudeLength = 2.0 * *out.linearAbsorptionLength;
    if (out.nonlinearGainLength)
        out.nonlinearFieldAmplitudeLength = 2.0 * *out.nonlinearGainLength;
    return out;
}

double phase_after_length(const PropagationReport& report, double lengthM) {
    return report.phasePerMeter * lengthM;
}

}  // namespace looplight
