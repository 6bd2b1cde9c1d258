#include "looplight/oracle.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace looplight {

namespace {
constexpr Complex kImag{0.0, 1.0};
}

StepTooCoarse::StepTooCoarse(double dt, double dtMax)
    : std::runtime_error([&] {
          std::ostringstream os;
          os << "integration step " << dt << " exceeds the resolution limit " << dtMax;
          return os.str();
      }()) {}

double max_time_step(const SystemParams& p, double omega41, double safetyFactor) {
    double fastest = std::abs(p.multiphotonDetuning()) + p.omega31 + p.omega32 +
                     p.omega42 + omega41;
    for (double g : {p.gamma31, p.gamma32, p.gamma41, p.gamma42, p.gammaC})
        fastest = std::max(fastest, g);
    for (double d : {p.delta31, p.delta32, p.delta42, p.delta41})
        fastest = std::max(fastest, std::abs(d));
    return safetyFactor / fastest;
}

Trajectory integrate(const SystemParams& p, const ProbeSpec& probe, double tFinal,
                     double dt, const IntegrateOptions& opts) {
    const double omega41 = probe.resolve(p);
    const double dtMax = max_time_step(p, omega41, opts.safetyFactor);
    if (dt > dtMax) throw StepTooCoarse(dt, dtMax);
    const auto nSteps = static_cast<std::size_t>(std::ceil(tFinal / dt));
    if (nSteps > 50'000'000) throw std::invalid_argument("integration would need too many steps");

    const DecomposedLiouvillian L = build_liouvillian(p);
    const double Delta = p.multiphotonDetuning();
    const double phi = p.loopPhase();

    auto deriv = [&](double t, const Vec15& R) -> Vec15 {
        const Complex ep = std::exp(kImag * (Delta * t - phi));
        const Complex em = std::conj(ep);
        Vec15 d = L.M0 * R - L.Sigma0;
        d += (omega41 * ep) * (L.Mminus * R - L.SigmaMinus);
        d += (omega41 * em) * (L.Mplus * R - L.SigmaPlus);
        return d;
    };

    Trajectory tr;
    tr.params = p;
    tr.omega41 = omega41;
    tr.dt = dt;
    tr.times.reserve(nSteps + 1);
    tr.states.reserve(nSteps + 1);

    Vec15 R = Vec15::Zero();
    R(component_index(1, 1)) = 1.0;
    tr.times.push_back(0.0);
    tr.states.push_back(R);

    double t = 0.0;
    for (std::size_t s = 0; s < nSteps; ++s) {
        const Vec15 k1 = deriv(t, R);
        const Vec15 k2 = deriv(t + 0.5 * dt, R + (0.5 * dt) * k1);
        const Vec15 k3 = deriv(t + 0.5 * dt, R + (0.5 * dt) * k2);
        const Vec15 k4 = deriv(t + dt, R + dt * k3);
        R += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = (s + 1) * dt;
        tr.times.push_back(t);
        tr.states.push_back(R);
    }
    return tr;
}

std::map<int, Vec15> extract_harmonics(const Trajectory& tr, double Delta,
                                       double phi, int mRange, int nPeriods) {
    if (tr.states.size() < 8) throw InsufficientTail("trajectory too short");
    std::map<int, Vec15> out;

    if (Delta == 0.0) {
        // Stationary long-time limit: plain average over the last fifth.
        const std::size_t n = tr.states.size();
        const std::size_t start = n - n / 5;
        Vec15 mean = Vec15::Zero();
        for (std::size_t i = start; i < n; ++i) mean += tr.states[i];
        mean /= static_cast<double>(n - start);
        for (int m = -mRange; m <= mRange; ++m)
            out[m] = (m == 0) ? mean : Vec15(Vec15::Zero());
        return out;
    }

    const double period = 2.0 * M_PI / std::abs(Delta);
    const double window = nPeriods * period;
    const double span = tr.times.back();
    if (window > 0.5 * span)
        throw InsufficientTail("trajectory tail does not cover the projection window");

    const auto count = static_cast<std::size_t>(std::llround(window / tr.dt));
    if (std::abs(count * tr.dt - window) > 1e-6 * window + 1e-3 * tr.dt)
        throw InsufficientTail("step does not divide the drive period; choose dt = T/k");
    const std::size_t start = tr.states.size() - count;

    // Rectangle rule over full periods: spectrally accurate for the
    // quasi-periodic tail.
    for (int m = -mRange; m <= mRange; ++m) {
        Vec15 acc = Vec15::Zero();
        for (std::size_t i = start; i < tr.states.size(); ++i) {
            const double t = tr.times[i];
            acc += tr.states[i] * std::exp(kImag * (m * (Delta * t - phi)));
        }
        out[m] = acc / static_cast<double>(count);
    }
    return out;
}

void write_trajectory_csv(const Trajectory& tr, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << "t";
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            if (a == 4 && b == 4) continue;
            os << ",re_r" << a << b << ",im_r" << a << b;
        }
    os << "\n";
    os.precision(17);
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        os << tr.times[i];
        for (int c = 0; c < 15; ++c)
            os << "," << tr.states[i](c).real() << "," << tr.states[i](c).imag();
        os << "\n";
    }
}

}  // namespace looplight
