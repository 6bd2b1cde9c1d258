#pragma once

#include <Eigen/Dense>
#include <complex>

#include "looplight/params.hpp"

namespace looplight {

using Complex = std::complex<double>;
using Mat15 = Eigen::Matrix<Complex, 15, 15>;
using Vec15 = Eigen::Matrix<Complex, 15, 1>;
using Mat16 = Eigen::Matrix<Complex, 16, 16>;

/// Basis ordering of the density-matrix vector: row-major over (a,b) with
/// rho_44 eliminated by the trace condition, i.e.
/// (r11, r12, r13, r14, r21, r22, r23, r24, r31, r32, r33, r34, r41, r42, r43).
/// component_index(4,1) == 12 is the probe coherence slot.
constexpr int component_index(int a, int b) { return 4 * (a - 1) + (b - 1); }

inline constexpr int kProbeCoherence = component_index(4, 1);  // 12 (0-based)

/// Master equation in matrix-vector form, dR/dt = M(t) R - Sigma(t), split by
/// powers of the probe drive:
///   M(t)     = M0 + Mminus * W41 e^{+i(Dt-phi)} + Mplus * W41 e^{-i(Dt-phi)}
///   Sigma(t) = Sigma0 + SigmaMinus * W41 e^{+i(Dt-phi)} + SigmaPlus * W41 e^{-i(Dt-phi)}
/// with D the multiphoton detuning and phi the loop phase. The +-1 parts are
/// per unit probe Rabi magnitude and carry no parameter dependence at all;
/// M0/Sigma0 carry everything except the probe.
struct DecomposedLiouvillian {
    Mat15 M0;
    Mat15 Mplus;
    Mat15 Mminus;
    Vec15 Sigma0;
    Vec15 SigmaPlus;
    Vec15 SigmaMinus;

    /// Full coefficient matrix at drive phase theta = D t - phi.
    Mat15 reconstructM(double omega41, double theta) const;
    Vec15 reconstructSigma(double omega41, double theta) const;
};

/// Generator on all 16 density-matrix components (no trace elimination),
/// d vec(rho)/dt = (L0 + Lminus W41 e^{+i th} + Lplus W41 e^{-i th}) vec(rho).
/// Homogeneous by construction; used for structural checks and as the
/// precursor of the eliminated form.
struct FullLiouvillian {
    Mat16 L0;
    Mat16 Lplus;
    Mat16 Lminus;
};

FullLiouvillian build_full_liouvillian(const SystemParams& p);

/// Commutator with H_I plus Lindblad decay plus collisional dephasing,
/// rho44 eliminated. Construction is total for any valid SystemParams.
DecomposedLiouvillian build_liouvillian(const SystemParams& p);

/// Independently hand-transcribed element table of M(t) and Sigma(t) for the
/// equal-decay-rate case (all gamma_jk == gammaR, gammaC == 0). Serves as a
/// regression fixture for build_liouvillian; see appendix_fixture_exclusions()
/// for the four entries where the source table is internally inconsistent.
struct AppendixReference {
    Mat15 M;
    Vec15 Sigma;
};

/// Requires equal decay rates and gammaC == 0 (throws std::invalid_argument
/// otherwise). omega41 is the probe Rabi magnitude; t the evaluation time.
AppendixReference appendix_reference(const SystemParams& p, double omega41, double t);

/// 1-based (row, col) entries of the reference table known to disagree with
/// the generator: the table's corrupted duplicate line fixes (7,8)/(8,7) to a
/// spurious value and leaves the rho24/rho42 diagonals (8,8)/(14,14) blank.
const std::vector<std::pair<int, int>>& appendix_fixture_exclusions();

}  // namespace looplight
