#include "looplight/response.hpp"

#include <cmath>
#include <limits>

namespace looplight {

bool ResponseCurve::allGaps() const {
    for (char g : gap)
        if (!g) return false;
    return !gap.empty();
}

double paper_unit(const MediumParams& m) {
    return 3.0 / (8.0 * M_PI * M_PI) * m.lambda41 * m.lambda41 * m.lambda41 * m.density;
}

Complex chi1(const FloquetSolution& s, const SystemParams& p, const MediumParams& m) {
    if (s.maxOrder() < 1) throw std::invalid_argument("chi1 needs maxOrder >= 1");
    return paper_unit(m) * p.gamma41 * s.coefficient(1, 1)(kProbeCoherence);
}

Complex chi3_scaled(const FloquetSolution& s, const SystemParams& p,
                    const MediumParams& m, double omega41) {
    if (s.maxOrder() < 3) throw std::invalid_argument("chi3_scaled needs maxOrder >= 3");
    return paper_unit(m) * p.gamma41 * omega41 * omega41 *
           s.coefficient(3, 1)(kProbeCoherence);
}

ResponseCurve scan(const SystemParams& p, const ProbeSpec& probe,
                   const MediumParams& m, const std::vector<double>& grid,
                   const ScanOptions& opts) {
    if (grid.empty()) throw std::invalid_argument("scan grid must be nonempty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("scan grid must be strictly increasing");

    const double omega41 = probe.resolve(p);
    const double unit = opts.paperNormalized ? paper_unit(m) : 1.0;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    ResponseCurve out;
    out.grid = grid;
    out.chi1.resize(grid.size());
    out.chi3Scaled.resize(grid.size());
    out.gap.assign(grid.size(), 0);
    out.unitsNote = opts.paperNormalized ? "paper-normalized" : "si";

    SystemParams pp = p;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        pp.delta41 = grid[i];
        try {
            const DecomposedLiouvillian L = build_liouvillian(pp);
            const FloquetSolution sol = solve_hierarchy(
                L, pp.multiphotonDetuning(), pp.loopPhase(), {opts.maxOrder});
            out.chi1[i] = chi1(sol, pp, m) / unit;
            // Linear-only scans leave the cubic column unset.
            out.chi3Scaled[i] = opts.maxOrder >= 3
                                    ? chi3_scaled(sol, pp, m, omega41) / unit
                                    : Complex(nan, nan);
        } catch (const SingularGenerator&) {
            out.chi1[i] = Complex(nan, nan);
            out.chi3Scaled[i] = Complex(nan, nan);
            out.gap[i] = 1;
        }
    }
    return out;
}

}  // namespace looplight
