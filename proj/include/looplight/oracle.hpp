#pragma once

#include <map>
#include <vector>

#include "looplight/floquet.hpp"

namespace looplight {

/// Direct fixed-step time integration of dR/dt = M(t) R - Sigma(t) with the
/// fully time-dependent generator. Verification path only; not tuned for
/// speed. Deterministic and reproducible by construction.
struct Trajectory {
    std::vector<double> times;
    std::vector<Vec15> states;
    SystemParams params;
    double omega41 = 0.0;
    double dt = 0.0;
};

class StepTooCoarse : public std::runtime_error {
public:
    explicit StepTooCoarse(double dt, double dtMax);
};

class InsufficientTail : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct IntegrateOptions {
    double safetyFactor = 0.05;  ///< dt must be <= safetyFactor / fastest rate
};

/// Largest admissible step for the given parameters.
double max_time_step(const SystemParams& p, double omega41, double safetyFactor = 0.05);

/// RK4 from the ground-state initial condition rho11 = 1. Throws
/// StepTooCoarse when dt violates the resolution criterion.
Trajectory integrate(const SystemParams& p, const ProbeSpec& probe,
                     double tFinal, double dt, const IntegrateOptions& opts = {});

/// Projects the trajectory tail onto e^{-i m (Delta t - phi)} over an integer
/// number of drive periods (plain tail average when Delta == 0). Returns the
/// order-summed coefficients sum_n R_n^{(m)} W41^n for |m| <= mRange. For
/// leak-free projection choose dt dividing the period 2pi/|Delta|.
std::map<int, Vec15> extract_harmonics(const Trajectory& tr, double Delta,
                                       double phi, int mRange, int nPeriods = 10);

/// CSV dump: time plus 15 complex components as re/im pairs.
void write_trajectory_csv(const Trajectory& tr, const std::string& path);

}  // namespace looplight
