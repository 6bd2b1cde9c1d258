#include "looplight/floquet.hpp"

#include <Eigen/LU>
#include <cmath>
#include <sstream>

namespace looplight {

SingularGenerator::SingularGenerator(int harmonic, double conditionEstimate)
    : std::runtime_error([&] {
          std::ostringstream os;
          os << "singular shifted generator at harmonic m = " << harmonic
             << " (condition estimate " << conditionEstimate << ")";
          return os.str();
      }()),
      harmonic_(harmonic),
      condition_(conditionEstimate) {}

FloquetSolution::FloquetSolution(int maxOrder, double Delta, double phi)
    : maxOrder_(maxOrder), Delta_(Delta), phi_(phi) {
    zero_.setZero();
    coeffs_.resize(maxOrder + 1);
    for (int n = 0; n <= maxOrder; ++n) coeffs_[n].assign(n + 1, zero_);
}

bool FloquetSolution::has(int n, int m) const {
    return n >= 0 && n <= maxOrder_ && std::abs(m) <= n && (n - m) % 2 == 0;
}

const Vec15& FloquetSolution::coefficient(int n, int m) const {
    if (!has(n, m)) return zero_;
    return coeffs_[n][(m + n) / 2];
}

void FloquetSolution::set(int n, int m, const Vec15& value) {
    if (!has(n, m)) throw std::logic_error("coefficient index violates the parity structure");
    coeffs_[n][(m + n) / 2] = value;
}

Vec15 FloquetSolution::reconstructState(double omega41, double t) const {
    const Complex kImag{0.0, 1.0};
    Vec15 out = Vec15::Zero();
    double wn = 1.0;
    for (int n = 0; n <= maxOrder_; ++n) {
        for (int m = -n; m <= n; m += 2)
            out += coefficient(n, m) * (wn * std::exp(-kImag * (m * (Delta_ * t - phi_))));
        wn *= omega41;
    }
    return out;
}

namespace {

// One-norm condition estimate; a 15x15 inverse is cheap enough to take directly.
double condition_estimate(const Mat15& A, const Eigen::PartialPivLU<Mat15>& lu) {
    const double normA = A.cwiseAbs().colwise().sum().maxCoeff();
    const Mat15 inv = lu.inverse();
    if (!inv.allFinite()) return std::numeric_limits<double>::infinity();
    const double normInv = inv.cwiseAbs().colwise().sum().maxCoeff();
    return normA * normInv;
}

}  // namespace

FloquetSolution solve_hierarchy(const DecomposedLiouvillian& L, double Delta,
                                double phi, const HierarchyOptions& opts) {
    if (opts.maxOrder < 1) throw std::invalid_argument("maxOrder must be >= 1");
    const Complex kImag{0.0, 1.0};

    FloquetSolution sol(opts.maxOrder, Delta, phi);

    // One factorization per distinct shift M0 + i m Delta.
    std::vector<Eigen::PartialPivLU<Mat15>> lus(2 * opts.maxOrder + 1);
    std::vector<char> ready(2 * opts.maxOrder + 1, 0);
    auto solve_shift = [&](int m, const Vec15& rhs) -> Vec15 {
        const int slot = m + opts.maxOrder;
        if (!ready[slot]) {
            const Mat15 A = L.M0 + kImag * (m * Delta) * Mat15::Identity();
            lus[slot].compute(A);
            const double cond = condition_estimate(A, lus[slot]);
            if (!(cond < opts.conditionLimit)) throw SingularGenerator(m, cond);
            ready[slot] = 1;
        }
        return lus[slot].solve(rhs);
    };

    sol.set(0, 0, solve_shift(0, L.Sigma0));
    for (int n = 1; n <= opts.maxOrder; ++n) {
        for (int m = -n; m <= n; m += 2) {
            Vec15 rhs = Vec15::Zero();
            if (n == 1 && m == 1) rhs += L.SigmaPlus;
            if (n == 1 && m == -1) rhs += L.SigmaMinus;
            if (sol.has(n - 1, m - 1)) rhs -= L.Mplus * sol.coefficient(n - 1, m - 1);
            if (sol.has(n - 1, m + 1)) rhs -= L.Mminus * sol.coefficient(n - 1, m + 1);
            sol.set(n, m, solve_shift(m, rhs));
        }
    }
    return sol;
}

Complex reconstruct_coherence_41(const FloquetSolution& s, double omega41,
                                 double phi41, double t, double probeFrequency) {
    const Complex kImag{0.0, 1.0};
    Complex out = 0.0;
    double wn = 1.0;
    for (int n = 0; n <= s.maxOrder(); ++n) {
        for (int m = -n; m <= n; m += 2) {
            const Complex c = s.coefficient(n, m)(kProbeCoherence);
            const double freq = probeFrequency + (m - 1) * s.Delta();
            const double phase = phi41 + (m - 1) * s.phi();
            out += c * wn * std::exp(-kImag * (freq * t)) * std::exp(kImag * phase);
        }
        wn *= omega41;
    }
    return out;
}

Eigen::Matrix<Complex, 4, 4> density_matrix_from_state(const Vec15& R) {
    Eigen::Matrix<Complex, 4, 4> rho;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            if (a == 4 && b == 4) continue;
            rho(a - 1, b - 1) = R(component_index(a, b));
        }
    rho(3, 3) = 1.0 - rho(0, 0) - rho(1, 1) - rho(2, 2);
    return rho;
}

}  // namespace looplight
