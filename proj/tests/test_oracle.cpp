#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "looplight/oracle.hpp"

using namespace looplight;

namespace {

// Mildly driven loop in natural-linewidth units; cheap to integrate.
SystemParams small_loop() {
    SystemParams p;
    p.gamma31 = p.gamma32 = p.gamma41 = p.gamma42 = 1.0;
    p.omega31 = 10.0;
    p.omega32 = 4.0;
    p.omega42 = 16.0;
    p.delta31 = 0.5;
    p.delta41 = -6.0;
    p.phi41 = 0.3;
    p.phi32 = -0.2;
    return p;
}

double period_snapped_dt(const SystemParams& p, double omega41) {
    double dt = max_time_step(p, omega41);
    const double Delta = p.multiphotonDetuning();
    if (Delta != 0.0) {
        const double T = 2.0 * M_PI / std::abs(Delta);
        dt = T / std::ceil(T / dt);
    }
    return dt;
}

}  // namespace

TEST_CASE("probe off: trajectory settles onto the stationary coefficient") {
    SystemParams p = small_loop();
    const DecomposedLiouvillian L = build_liouvillian(p);
    const FloquetSolution s = solve_hierarchy(L, p.multiphotonDetuning(), 0.0, {1});

    const double dt = max_time_step(p, 0.0);
    const Trajectory tr = integrate(p, ProbeSpec::absolute(0.0), 30.0, dt);
    CHECK((tr.states.back() - s.coefficient(0, 0)).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("trace of the reconstructed density matrix stays one") {
    const SystemParams p = small_loop();
    const double w = 1.6;
    const Trajectory tr = integrate(p, ProbeSpec::absolute(w), 20.0,
                                    period_snapped_dt(p, w));
    for (std::size_t i = 0; i < tr.states.size(); i += 257) {
        const auto rho = density_matrix_from_state(tr.states[i]);
        CHECK(std::abs(rho.trace() - Complex(1.0, 0.0)) < 1e-10);
        CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("physical states: eigenvalues stay nonnegative along the run") {
    const SystemParams p = small_loop();
    const double w = 1.6;
    const Trajectory tr = integrate(p, ProbeSpec::absolute(w), 25.0,
                                    period_snapped_dt(p, w));
    for (std::size_t i = 0; i < tr.states.size(); i += 1023) {
        const auto rho = density_matrix_from_state(tr.states[i]);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Complex, 4, 4>> es(rho);
        CHECK(es.eigenvalues().minCoeff() > -1e-8);
    }
}

TEST_CASE("step criterion is enforced") {
    const SystemParams p = small_loop();
    const double dtMax = max_time_step(p, 1.0);
    CHECK_THROWS_AS(integrate(p, ProbeSpec::absolute(1.0), 1.0, 2.0 * dtMax),
                    StepTooCoarse);
}

TEST_CASE("tail projection recovers the stationary part with the probe off") {
    const SystemParams p = small_loop();
    const DecomposedLiouvillian L = build_liouvillian(p);
    const double Delta = p.multiphotonDetuning();
    const double phi = p.loopPhase();
    const FloquetSolution s = solve_hierarchy(L, Delta, phi, {1});

    const Trajectory tr =
        integrate(p, ProbeSpec::absolute(0.0), 40.0, period_snapped_dt(p, 0.0));
    const auto harmonics = extract_harmonics(tr, Delta, phi, 1);
    CHECK((harmonics.at(0) - s.coefficient(0, 0)).cwiseAbs().maxCoeff() < 1e-7);
    CHECK(harmonics.at(1).cwiseAbs().maxCoeff() < 1e-7);
}

TEST_CASE("first harmonic matches the hierarchy prediction") {
    const SystemParams p = small_loop();
    const double w = 0.4;  // weak probe keeps the truncation residual tiny
    const DecomposedLiouvillian L = build_liouvillian(p);
    const double Delta = p.multiphotonDetuning();
    const double phi = p.loopPhase();
    const FloquetSolution s = solve_hierarchy(L, Delta, phi, {3});

    const Trajectory tr =
        integrate(p, ProbeSpec::absolute(w), 45.0, period_snapped_dt(p, w));
    const auto harmonics = extract_harmonics(tr, Delta, phi, 2);

    const Complex hier = s.coefficient(1, 1)(kProbeCoherence) * w +
                         s.coefficient(3, 1)(kProbeCoherence) * w * w * w;
    const Complex time = harmonics.at(1)(kProbeCoherence);
    CHECK(std::abs(hier - time) / std::abs(time) < 1e-4);
}

TEST_CASE("second harmonic scales quadratically in the probe strength") {
    const SystemParams p = small_loop();
    const double Delta = p.multiphotonDetuning();
    const double phi = p.loopPhase();

    auto m2 = [&](double w) {
        const Trajectory tr =
            integrate(p, ProbeSpec::absolute(w), 45.0, period_snapped_dt(p, w));
        return extract_harmonics(tr, Delta, phi, 2).at(2)(component_index(4, 2));
    };
    const Complex a = m2(0.5);
    const Complex b = m2(0.25);
    // Fitted exponent; the w^4 tail shifts the two-point ratio slightly.
    const double exponent = std::log2(std::abs(a / b));
    CHECK(exponent == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("halving the step barely moves the extracted harmonics") {
    const SystemParams p = small_loop();
    const double w = 0.8;
    const double Delta = p.multiphotonDetuning();
    const double phi = p.loopPhase();

    auto extract = [&](double dt) {
        const Trajectory tr = integrate(p, ProbeSpec::absolute(w), 40.0, dt);
        return extract_harmonics(tr, Delta, phi, 1).at(1)(kProbeCoherence);
    };
    const double dt = period_snapped_dt(p, w);
    const Complex coarse = extract(dt);
    const Complex fine = extract(dt / 2);
    CHECK(std::abs(coarse - fine) / std::abs(fine) < 1e-6);
}

TEST_CASE("cubic coefficient isolated from two probe strengths") {
    const SystemParams p = small_loop();
    const DecomposedLiouvillian L = build_liouvillian(p);
    const double Delta = p.multiphotonDetuning();
    const double phi = p.loopPhase();
    const FloquetSolution s = solve_hierarchy(L, Delta, phi, {3});

    // Weak enough that the w^5 tail stays under the 1e-3 recovery target.
    const double w = 0.15;
    auto m1 = [&](double wp) {
        const Trajectory tr =
            integrate(p, ProbeSpec::absolute(wp), 45.0, period_snapped_dt(p, wp));
        return extract_harmonics(tr, Delta, phi, 1).at(1)(kProbeCoherence);
    };
    // m1(w) = a w + b w^3: solve the 2x2 system from w and w/2.
    const Complex f1 = m1(w);
    const Complex f2 = m1(w / 2);
    const Complex b = (f1 - 2.0 * f2) / (w * w * w * (1.0 - 0.25));
    const Complex expected = s.coefficient(3, 1)(kProbeCoherence);
    CHECK(std::abs(b - expected) / std::abs(expected) < 1e-3);
}

TEST_CASE("insufficient tail is reported") {
    const SystemParams p = small_loop();
    const double w = 0.5;
    const double dt = period_snapped_dt(p, w);
    const Trajectory tr = integrate(p, ProbeSpec::absolute(w), 2.0, dt);
    CHECK_THROWS_AS(extract_harmonics(tr, p.multiphotonDetuning(), 0.0, 1, 50),
                    InsufficientTail);
}

TEST_CASE("trajectory CSV dump") {
    const SystemParams p = small_loop();
    const Trajectory tr = integrate(p, ProbeSpec::absolute(0.0), 0.5,
                                    max_time_step(p, 0.0));
    const std::string path = "oracle_dump_test.csv";
    write_trajectory_csv(tr, path);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("t,re_r11,im_r11", 0) == 0);
    std::remove(path.c_str());
}
