#include <doctest.h>

#include <cmath>

#include "looplight/constants.hpp"
#include "looplight/params.hpp"

using namespace looplight;

namespace {
SystemParams valid_base() {
    SystemParams p;
    p.gamma31 = p.gamma32 = p.gamma41 = p.gamma42 = 1.0;
    return p;
}
}  // namespace

TEST_CASE("multiphoton detuning combines the loop detunings with signs ++--") {
    SystemParams p = valid_base();
    CHECK(p.multiphotonDetuning() == 0.0);

    p.delta41 = -25.0;
    CHECK(p.multiphotonDetuning() == doctest::Approx(-25.0));

    const double ghz = 2.0 * M_PI * 1e9;
    p = valid_base();
    p.delta41 = -17.8 * ghz;
    p.delta31 = 1.6 * ghz;
    CHECK(p.multiphotonDetuning() == doctest::Approx(-19.4 * ghz).epsilon(1e-14));

    // Linearity with the fixed sign pattern.
    p = valid_base();
    p.delta31 = 0.3;
    p.delta32 = -1.2;
    p.delta42 = 2.5;
    p.delta41 = 0.9;
    CHECK(p.multiphotonDetuning() ==
          doctest::Approx(0.9 + (-1.2) - 0.3 - 2.5).epsilon(1e-15));
}

TEST_CASE("loop phase combines dipole phases the same way") {
    SystemParams p = valid_base();
    p.phi41 = 0.4;
    p.phi32 = 0.25;
    p.phi31 = -0.1;
    p.phi42 = 1.0;
    CHECK(p.loopPhase() == doctest::Approx(0.4 + 0.25 + 0.1 - 1.0).epsilon(1e-15));
}

TEST_CASE("parameter validation") {
    SystemParams p = valid_base();
    p.omega31 = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = valid_base();
    p.gamma41 = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = valid_base();
    p.gammaC = -0.5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("dipole moment from the radiative rate") {
    const double gamma = 2.0 * M_PI * 9.76e6;
    const double lambda = 589.2e-9;
    const double d = dipole_moment_from_decay(gamma, lambda);

    // Independent evaluation of sqrt(3 eps0 hbar gamma lambda^3 / (8 pi^2)).
    using namespace constants;
    const double lam3 = lambda * lambda * lambda;
    const double expected = std::sqrt(3.0 * eps0 * hbar * gamma * lam3 / (8.0 * M_PI * M_PI));
    CHECK(d == doctest::Approx(expected).epsilon(1e-13));
    CHECK(d == doctest::Approx(2.1e-29).epsilon(0.02));

    CHECK(dipole_moment_from_decay(4.0 * gamma, lambda) ==
          doctest::Approx(2.0 * d).epsilon(1e-13));
    CHECK(dipole_moment_from_decay(gamma, 2.0 * lambda) ==
          doctest::Approx(std::pow(2.0, 1.5) * d).epsilon(1e-13));
    CHECK_THROWS_AS(dipole_moment_from_decay(0.0, lambda), std::invalid_argument);
}

TEST_CASE("probe intensity and the unit round trip") {
    const double d = dipole_moment_from_decay(2.0 * M_PI * 9.76e6, 589.2e-9);
    CHECK(probe_intensity(0.0, d) == 0.0);

    const double w = 2.0 * M_PI * 2.5e9;
    CHECK(probe_intensity(2.0 * w, d) == doctest::Approx(4.0 * probe_intensity(w, d)));

    // Omega -> E -> I -> E -> Omega is the identity.
    const double back = rabi_from_intensity(probe_intensity(w, d), d);
    CHECK(back == doctest::Approx(w).epsilon(1e-12));

    // Frozen regression value for the sodium-cell probe strength.
    CHECK(probe_intensity(w, d) == doctest::Approx(8.1838413e6).epsilon(1e-6));
}

TEST_CASE("relative probe strength uses the weakest switched-on control") {
    SystemParams p = valid_base();
    p.omega31 = 50.0;
    p.omega32 = 0.0;
    p.omega42 = 100.0;
    CHECK(ProbeSpec::relative(0.1).resolve(p) == doctest::Approx(5.0));

    p.omega32 = 34.0;
    CHECK(ProbeSpec::relative(0.1).resolve(p) == doctest::Approx(3.4));

    CHECK(ProbeSpec::absolute(7.5).resolve(p) == 7.5);

    SystemParams off = valid_base();
    CHECK_THROWS_AS(ProbeSpec::relative(0.1).resolve(off), std::invalid_argument);
}

TEST_CASE("medium validation") {
    MediumParams m;
    m.density = 1e20;
    m.lambda41 = 589.2e-9;
    m.temperature = 547.6;
    m.atomMass = 22.99 * constants::atomicMassUnit;
    CHECK_NOTHROW(m.validate());
    CHECK(m.probeWavenumber() == doctest::Approx(2.0 * M_PI / 589.2e-9));

    m.fieldDirections.dir32 = -1.5;
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
}
