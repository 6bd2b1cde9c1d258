#include "looplight/broadening.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "looplight/constants.hpp"

namespace looplight {

double most_probable_speed(double temperatureK, double massKg) {
    if (temperatureK <= 0 || massKg <= 0)
        throw std::invalid_argument("most_probable_speed needs positive inputs");
    return std::sqrt(2.0 * constants::kBoltzmann * temperatureK / massKg);
}

double doppler_linewidth_fwhm(double temperatureK, double massKg, double wavenumber) {
    if (temperatureK <= 0 || massKg <= 0 || wavenumber <= 0)
        throw std::invalid_argument("doppler_linewidth_fwhm needs positive inputs");
    return wavenumber *
           std::sqrt(std::log(2.0) * 8.0 * constants::kBoltzmann * temperatureK / massKg);
}

double collision_rate(double selfDensity, double bufferDensity, double selfConst,
                      double bufferConst) {
    if (selfDensity < 0 || bufferDensity < 0 || selfConst < 0 || bufferConst < 0)
        throw std::invalid_argument("collision_rate needs nonnegative inputs");
    return selfConst * selfDensity + bufferConst * bufferDensity;
}

MeanFreePathDiagnostic mean_free_path_diagnostic(const MediumParams& m) {
    // Hard-sphere Na-Ar cross-section, order-of-magnitude constant.
    constexpr double kCrossSection = 3e-19;  // m^2
    MeanFreePathDiagnostic out;
    if (m.bufferDensity <= 0) return out;
    out.lambdaMFP = 1.0 / (std::sqrt(2.0) * m.bufferDensity * kCrossSection);
    out.dickeRegime = *out.lambdaMFP < m.lambda41;
    return out;
}

VelocityQuadrature gauss_hermite_rule(double vm, int nNodes) {
    VelocityQuadrature q;
    q.vm = vm;
    if (vm == 0.0 || nNodes == 1) {
        q.nodes = {0.0};
        q.weights = {1.0};
        return q;
    }
    if (nNodes < 2 || nNodes % 2 != 0)
        throw std::invalid_argument("gauss_hermite_rule needs an even node count >= 2");

    // Golub-Welsch on the Hermite Jacobi matrix, weight e^{-x^2}.
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(nNodes, nNodes);
    for (int k = 1; k < nNodes; ++k) {
        const double b = std::sqrt(k / 2.0);
        J(k - 1, k) = b;
        J(k, k - 1) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    const Eigen::VectorXd x = es.eigenvalues();
    Eigen::VectorXd w(nNodes);
    for (int i = 0; i < nNodes; ++i) {
        const double v0 = es.eigenvectors()(0, i);
        w(i) = v0 * v0;  // already normalized against e^{-x^2}/sqrt(pi)
    }
    w /= w.sum();

    q.nodes.resize(nNodes);
    q.weights.resize(nNodes);
    for (int i = 0; i < nNodes; ++i) {
        q.weights[i] = 0.5 * (w(i) + w(nNodes - 1 - i));
        q.nodes[i] = vm * 0.5 * (x(i) - x(nNodes - 1 - i));
    }
    return q;
}

ResponseCurve doppler_average_scan(const SystemParams& p, const ProbeSpec& probe,
                                   const MediumParams& m,
                                   const std::vector<double>& grid,
                                   const VelocityQuadrature& q,
                                   const DopplerOptions& opts) {
    m.validate();
    const double k = m.probeWavenumber();
    const double gammaCollision = collision_rate(m.density, m.bufferDensity,
                                                 m.selfCollisionConst,
                                                 m.bufferCollisionConst);

    ResponseCurve acc;
    acc.grid = grid;
    acc.chi1.assign(grid.size(), Complex(0, 0));
    acc.chi3Scaled.assign(grid.size(), Complex(0, 0));
    acc.gap.assign(grid.size(), 0);

    // Fixed node order keeps the reduction bitwise deterministic.
    for (std::size_t nIdx = 0; nIdx < q.nodes.size(); ++nIdx) {
        const double v = q.nodes[nIdx];
        const double wgt = q.weights[nIdx];

        SystemParams pv = p;
        pv.gammaC = p.gammaC + gammaCollision;
        pv.delta31 -= k * opts.wavenumberScale31 * m.fieldDirections.dir31 * v;
        pv.delta32 -= k * opts.wavenumberScale32 * m.fieldDirections.dir32 * v;
        pv.delta42 -= k * opts.wavenumberScale42 * m.fieldDirections.dir42 * v;

        // Probe always shifts with the full wavenumber along its own axis.
        std::vector<double> shifted(grid.size());
        const double probeShift = -k * FieldGeometry::dir41 * v;
        for (std::size_t i = 0; i < grid.size(); ++i) shifted[i] = grid[i] + probeShift;

        const ResponseCurve node = scan(pv, probe, m, shifted, opts.scan);
        acc.unitsNote = node.unitsNote;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (node.gap[i]) {
                acc.gap[i] = 1;
                continue;
            }
            acc.chi1[i] += wgt * node.chi1[i];
            acc.chi3Scaled[i] += wgt * node.chi3Scaled[i];
        }
    }

    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (acc.gap[i]) {
            acc.chi1[i] = Complex(nan, nan);
            acc.chi3Scaled[i] = Complex(nan, nan);
        }
    return acc;
}

}  // namespace looplight
