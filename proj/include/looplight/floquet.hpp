#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "looplight/liouvillian.hpp"

namespace looplight {

/// Raised when a shifted generator (M0 + i m D) is numerically singular,
/// e.g. with all control fields off (decoupled ground manifold) or at an
/// accidental degeneracy. Carries the offending harmonic shift.
class SingularGenerator : public std::runtime_error {
public:
    SingularGenerator(int harmonic, double conditionEstimate);
    int harmonic() const { return harmonic_; }
    double conditionEstimate() const { return condition_; }

private:
    int harmonic_;
    double condition_;
};

/// Fourier-perturbative coefficients R_n^{(m)} of the long-time solution.
/// Coefficients exist only for |m| <= n with m of the same parity as n; all
/// other (n, m) are identically zero. They are independent of the loop phase,
/// which enters reconstruction only.
class FloquetSolution {
public:
    FloquetSolution(int maxOrder, double Delta, double phi);

    int maxOrder() const { return maxOrder_; }
    double Delta() const { return Delta_; }
    double phi() const { return phi_; }

    /// True iff (n, m) is a structurally allowed index within maxOrder.
    bool has(int n, int m) const;

    /// R_n^{(m)}; the zero vector for structurally absent indices.
    const Vec15& coefficient(int n, int m) const;

    void set(int n, int m, const Vec15& value);

    /// Interaction-picture state summed over all stored coefficients at
    /// drive phase theta = Delta t - phi and given probe Rabi magnitude.
    Vec15 reconstructState(double omega41, double t) const;

private:
    int maxOrder_;
    double Delta_;
    double phi_;
    std::vector<std::vector<Vec15>> coeffs_;  // [n][(m+n)/2]
    Vec15 zero_;
};

struct HierarchyOptions {
    int maxOrder = 3;
    double conditionLimit = 1e12;  ///< SingularGenerator above this estimate
};

/// Solves the recursive chain of time-independent linear systems
///   (M0 + i m D) R_n^{(m)} = delta_{n,1} Sigma_{m} - Mplus R_{n-1}^{(m-1)}
///                                               - Mminus R_{n-1}^{(m+1)}
/// by dense partial-pivot LU, one factorization per distinct shift.
FloquetSolution solve_hierarchy(const DecomposedLiouvillian& L, double Delta,
                                double phi, const HierarchyOptions& opts = {});

/// Schroedinger-picture probe coherence rho41(t): component 13 of each
/// coefficient weighted by W41^n e^{-i[w41+(m-1)D]t} e^{i[phi41+(m-1)phi]}.
/// probeFrequency is the optical angular frequency w41.
Complex reconstruct_coherence_41(const FloquetSolution& s, double omega41,
                                 double phi41, double t, double probeFrequency);

/// Reinserts rho44 = 1 - r11 - r22 - r33 into a 15-component state vector.
Eigen::Matrix<Complex, 4, 4> density_matrix_from_state(const Vec15& R);

}  // namespace looplight
