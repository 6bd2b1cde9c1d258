#pragma once

#include <optional>
#include <vector>

#include "looplight/response.hpp"

namespace looplight {

/// Quadrature over the one-dimensional thermal velocity distribution
/// f(v) = exp(-(v/vm)^2) / (sqrt(pi) vm).
struct VelocityQuadrature {
    std::vector<double> nodes;    ///< velocities, m/s, symmetric about 0
    std::vector<double> weights;  ///< probabilities, sum to 1
    double vm = 0.0;              ///< most probable speed, m/s
};

/// Most probable speed sqrt(2 kB T / m).
double most_probable_speed(double temperatureK, double massKg);

/// Doppler FWHM k sqrt(ln 2 * 8 kB T / m), rad/s.
double doppler_linewidth_fwhm(double temperatureK, double massKg, double wavenumber);

/// Collisional coherence decay rate Cs Ns + Cb Nb, 1/s.
double collision_rate(double selfDensity, double bufferDensity,
                      double selfConst, double bufferConst);

struct MeanFreePathDiagnostic {
    std::optional<double> lambdaMFP;  ///< absent when the buffer density is 0
    bool dickeRegime = false;         ///< mean free path below the wavelength
};

/// Hard-sphere estimate Lambda = 1/(sqrt(2) Nb sigma) with sigma = 3e-19 m^2,
/// an order-of-magnitude Na-Ar cross-section. Diagnostic only.
MeanFreePathDiagnostic mean_free_path_diagnostic(const MediumParams& m);

/// Gauss-Hermite rule rescaled to the thermal distribution; exact for
/// polynomials in v of degree 2 nNodes - 1. vm == 0 degenerates to the single
/// node at rest. nNodes must be even (and >= 2) otherwise.
VelocityQuadrature gauss_hermite_rule(double vm, int nNodes);

struct DopplerOptions {
    ScanOptions scan;
    double wavenumberScale31 = 1.0;  ///< per-field k as a multiple of 2pi/lambda41
    double wavenumberScale32 = 1.0;
    double wavenumberScale42 = 1.0;
};

/// Thermal average of the response: every field's detuning is shifted by
/// -k v cos(theta_field) per velocity node (the non-relativistic Doppler
/// shift), the collisional rate from the medium is added to gammaC, and the
/// per-node curves are averaged with the quadrature weights in fixed node
/// order. A node failure poisons only its grid point.
ResponseCurve doppler_average_scan(const SystemParams& p, const ProbeSpec& probe,
                                   const MediumParams& m,
                                   const std::vector<double>& grid,
                                   const VelocityQuadrature& q,
                                   const DopplerOptions& opts = {});

}  // namespace looplight
