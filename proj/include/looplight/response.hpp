#pragma once

#include <string>
#include <vector>

#include "looplight/floquet.hpp"
#include "looplight/params.hpp"

namespace looplight {

/// chi(1) and the intensity-scaled chi(3) sampled over a probe-detuning grid.
/// chi3Scaled stores (3/4) E41^2 chi(3), the plotting convention that makes
/// linear and nonlinear curves directly comparable. Grid points where the
/// hierarchy solve hit a singular shift are gaps (NaN entries, gap flag set).
struct ResponseCurve {
    std::vector<double> grid;         ///< probe detunings, strictly increasing
    std::vector<Complex> chi1;
    std::vector<Complex> chi3Scaled;
    std::vector<char> gap;            ///< 1 where the solve failed
    std::string unitsNote;            ///< "paper-normalized" or "si"

    std::size_t size() const { return grid.size(); }
    bool isGap(std::size_t i) const { return gap[i] != 0; }
    bool allGaps() const;
};

/// Normalization constant (3/8pi^2) lambda^3 N of the plotting convention.
double paper_unit(const MediumParams& m);

/// Linear probe susceptibility chi(1) = (3/8pi^2) lambda^3 N gamma41 [R_1^(1)]_13.
Complex chi1(const FloquetSolution& s, const SystemParams& p, const MediumParams& m);

/// (3/4) E41^2 chi(3) = (3/8pi^2) lambda^3 N gamma41 W41^2 [R_3^(1)]_13.
Complex chi3_scaled(const FloquetSolution& s, const SystemParams& p,
                    const MediumParams& m, double omega41);

struct ScanOptions {
    int maxOrder = 3;
    bool paperNormalized = true;  ///< divide chi columns by paper_unit(m)
};

/// Evaluates both susceptibilities across a detuning grid: per point, rebuilds
/// the system with that probe detuning, builds the generator, solves the
/// hierarchy at the resulting multiphoton detuning, and extracts chi values.
ResponseCurve scan(const SystemParams& p, const ProbeSpec& probe,
                   const MediumParams& m, const std::vector<double>& grid,
                   const ScanOptions& opts = {});

}  // namespace looplight
