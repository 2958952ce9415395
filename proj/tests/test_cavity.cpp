#include "qvac/cavity.hpp"

#include "qvac/errors.hpp"
#include "quadrature_test_helpers.hpp"

#include <cmath>
#include <doctest.h>
#include <numbers>

using namespace qvac;
using namespace qvac::cavity;

namespace {
constexpr double pi = std::numbers::pi;

// Per-mirror reflectivity realizing a requested finesse exactly with
// r1 = r2 = s: then sqrt(r1 r2) = s and the finesse is pi s / (1 - s^2),
// giving s = (-pi + sqrt(pi^2 + 4 F^2)) / (2 F).
double reflectivity_for_finesse(double f) {
    return (-pi + std::sqrt(pi * pi + 4.0 * f * f)) / (2.0 * f);
}
} // namespace

TEST_CASE("cavity construction") {
    const Cavity cav(0.9, 0.8, 2.0);
    CHECK(cav.tau == doctest::Approx(2.0));
    CHECK(cav.finesse == doctest::Approx(pi * std::sqrt(0.72) / (1.0 - 0.72)).epsilon(1e-15));
    CHECK_THROWS_AS(Cavity(1.0, 0.5, 1.0), invalid_input);
    CHECK_THROWS_AS(Cavity(0.5, 0.5, 0.0), invalid_input);
    CHECK_THROWS_AS(Cavity(-0.1, 0.5, 1.0), invalid_input);

    SUBCASE("SI lengths give tau = L/c") {
        const Cavity si(0.9, 0.9, 1.0, UnitSystem::si);
        CHECK(si.tau == doctest::Approx(1.0 / 2.99792458e8).epsilon(1e-9));
    }
}

TEST_CASE("airy_buildup") {
    SUBCASE("no cavity means unit buildup") {
        const Cavity cav(0.0, 0.0, 1.0);
        for (double w : {0.0, 0.3, 2.0, 11.0})
            CHECK(airy_buildup(cav, w) == doctest::Approx(1.0));
    }
    SUBCASE("resonant and anti-resonant values for r = 0.9") {
        // r1 r2 = 0.9 overall
        const Cavity cav(0.9, 1.0 - 1e-12, 1.0);
        REQUIRE(cav.round_trip_reflectivity() == doctest::Approx(0.9).epsilon(1e-11));
        const double peak = airy_buildup(cav, pi / cav.tau); // cos(2 w tau) = 1
        CHECK(peak == doctest::Approx(19.0).epsilon(1e-9));
        const double dip = airy_buildup(cav, 0.5 * pi / cav.tau); // cos = -1
        CHECK(dip == doctest::Approx(1.0 / 19.0).epsilon(1e-9));
    }
    SUBCASE("periodic with period pi/tau") {
        const Cavity cav(0.7, 0.6, 3.0);
        const double period = pi / cav.tau;
        for (double w : {0.1, 0.9, 4.0})
            CHECK(airy_buildup(cav, w + period) == doctest::Approx(airy_buildup(cav, w))
                                                       .epsilon(1e-12));
    }
    SUBCASE("average over one period is 1") {
        const Cavity cav(0.95, 0.9, 1.0);
        const double period = pi / cav.tau;
        const double mean =
            qvac::tests::integrate([&](double w) { return airy_buildup(cav, w); }, 0.0, period) /
            period;
        CHECK(mean == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("resonance_frequencies") {
    const Cavity cav(0.9, 0.9, 1.0);
    REQUIRE(cav.tau == 1.0);
    const auto modes = resonance_frequencies(cav, 6);
    REQUIRE(modes.size() == 5);
    CHECK(modes[0].n == 2);
    CHECK(modes[0].omega == doctest::Approx(2.0 * pi));
    CHECK(modes[0].even);
    CHECK(modes[1].n == 3);
    CHECK(modes[1].omega == doctest::Approx(3.0 * pi));
    CHECK_FALSE(modes[1].even);
    CHECK_THROWS_AS(resonance_frequencies(cav, 1), invalid_input);

    SUBCASE("one-metre cavity in SI has its first even mode near 1.88e9 rad/s") {
        const Cavity si(0.9, 0.9, 1.0, UnitSystem::si);
        const auto m = resonance_frequencies(si, 2);
        CHECK(m[0].omega == doctest::Approx(2.0 * pi * 2.99792458e8).epsilon(1e-9));
        CHECK(m[0].omega == doctest::Approx(1.88e9).epsilon(3e-3));
    }
}

TEST_CASE("radiated_photons") {
    SUBCASE("no motion, no photons") {
        const Cavity cav(0.9, 0.9, 1.0);
        const MotionSpec motion(MotionSpec::Mode::elongation, 2.0 * pi, 0.0, 5.0);
        CHECK(radiated_photons(cav, motion) == 0.0);
    }

    SUBCASE("the three factors multiply to N") {
        // target: cycles = 1e7, v/c = 1e-8, F = 1e9  =>  N = 1
        const double finesse = 1e9;
        const double r = reflectivity_for_finesse(finesse);
        const Cavity cav(r, r, 1.0);
        // the 1 - r1 r2 cancellation limits the realized finesse to ~1e-7
        CHECK(cav.finesse == doctest::Approx(finesse).epsilon(1e-6));
        const double omega = 2.0 * pi / cav.tau; // n = 2, even
        const double duration = 1e7 * 2.0 * pi / omega;
        const double amplitude = 1e-8 / omega;
        const MotionSpec motion(MotionSpec::Mode::elongation, omega, amplitude, duration);
        CHECK(radiated_photons(cav, motion) == doctest::Approx(1.0).epsilon(1e-6));
    }

    SUBCASE("linear in the finesse, monotone in T, a, F") {
        const double r1 = reflectivity_for_finesse(1e3);
        const double r2 = reflectivity_for_finesse(2e3);
        const Cavity c1(r1, r1, 1.0);
        const Cavity c2(r2, r2, 1.0);
        const MotionSpec motion(MotionSpec::Mode::translation, 3.0 * pi, 1e-4, 40.0);
        const double n1 = radiated_photons(c1, motion);
        const double n2 = radiated_photons(c2, motion);
        // N/F is cavity-independent: exact linearity in the finesse
        CHECK(n2 / c2.finesse == doctest::Approx(n1 / c1.finesse).epsilon(1e-13));
        const MotionSpec longer(MotionSpec::Mode::translation, 3.0 * pi, 1e-4, 80.0);
        CHECK(radiated_photons(c1, longer) > n1);
        const MotionSpec stronger(MotionSpec::Mode::translation, 3.0 * pi, 2e-4, 40.0);
        CHECK(radiated_photons(c1, stronger) > n1);
    }

    SUBCASE("resonance gate") {
        const Cavity cav(0.9, 0.9, 1.0);
        CHECK_THROWS_AS(radiated_photons(cav, MotionSpec(MotionSpec::Mode::elongation, 2.5 * pi,
                                                         1e-6, 1.0)),
                        domain_error);
        // n = 1 sits below the allowed band even though it is a multiple of pi/tau
        CHECK_THROWS_AS(radiated_photons(cav, MotionSpec(MotionSpec::Mode::translation, pi,
                                                         1e-6, 1.0)),
                        domain_error);
        // parity mismatch: n = 3 driven as elongation
        CHECK_THROWS_AS(radiated_photons(cav, MotionSpec(MotionSpec::Mode::elongation, 3.0 * pi,
                                                         1e-6, 1.0)),
                        domain_error);
        // within the 1e-6 relative gate the drive locks on
        const MotionSpec close(MotionSpec::Mode::elongation, 2.0 * pi * (1.0 + 5e-7), 1e-6, 1.0);
        CHECK(radiated_photons(cav, close) > 0.0);
    }

    SUBCASE("superluminal drives are rejected at construction") {
        CHECK_THROWS_AS(MotionSpec(MotionSpec::Mode::elongation, 2.0 * pi, 1.0, 1.0),
                        invalid_input);
    }
}
