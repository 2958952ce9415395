#include "qvac/measurement.hpp"

#include "qvac/errors.hpp"

#include <cmath>
#include <complex>
#include <doctest.h>
#include <random>

using namespace qvac;
using namespace qvac::measurement;

TEST_CASE("chi_mech") {
    const MechanicalSusceptibility s(2.0, 1.5, 0.1);

    SUBCASE("static limit is real") {
        const auto chi = chi_mech(s, 0.0);
        CHECK(chi.real() == doctest::Approx(1.0 / (2.0 * 1.5 * 1.5)).epsilon(1e-15));
        CHECK(chi.imag() == 0.0);
    }
    SUBCASE("resonance is purely imaginary") {
        const auto chi = chi_mech(s, 1.5);
        CHECK(std::abs(chi.real()) < 1e-15);
        CHECK(chi.imag() == doctest::Approx(1.0 / (2.0 * 0.1 * 1.5)).epsilon(1e-14));
    }
    SUBCASE("dissipative fraction identity") {
        for (double w : {0.2, 1.0, 1.5, 4.0}) {
            const auto chi = chi_mech(s, w);
            const double lhs = std::abs(chi.imag()) / std::abs(chi);
            const double d = 1.5 * 1.5 - w * w;
            const double rhs = 0.1 * w / std::sqrt(d * d + 0.1 * 0.1 * w * w);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
        }
    }
    SUBCASE("undamped resonance is singular") {
        const MechanicalSusceptibility undamped(1.0, 2.0, 0.0);
        CHECK_THROWS_AS(chi_mech(undamped, 2.0), singularity_error);
    }
}

TEST_CASE("bounds") {
    const MechanicalSusceptibility s(1.0, 1.0, 0.01);

    SUBCASE("uql <= sql everywhere, equal exactly at resonance") {
        for (double w : {0.1, 0.5, 0.999, 1.0, 1.3, 7.0}) {
            CHECK(uql_bound(s, w) <= sql_bound(s, w) * (1.0 + 1e-15));
        }
        CHECK(uql_bound(s, 1.0) == doctest::Approx(sql_bound(s, 1.0)).epsilon(1e-12));
        CHECK(sql_bound(s, 1.0) == doctest::Approx(1.0 / 0.01).epsilon(1e-12));
    }
    SUBCASE("zero frequency: sql static, uql vanishes") {
        CHECK(sql_bound(s, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(uql_bound(s, 0.0) == 0.0);
    }
    SUBCASE("small damping off resonance: uql far below sql") {
        CHECK(uql_bound(s, 0.5) < 0.02 * sql_bound(s, 0.5));
    }
    SUBCASE("all bounds scale as 1/m") {
        const MechanicalSusceptibility heavy(10.0, 1.0, 0.01);
        for (double w : {0.3, 1.0, 2.0}) {
            CHECK(sql_bound(heavy, w) == doctest::Approx(sql_bound(s, w) / 10.0).epsilon(1e-13));
            CHECK(uql_bound(heavy, w) == doctest::Approx(uql_bound(s, w) / 10.0).epsilon(1e-13));
        }
    }
}

TEST_CASE("measured_position_noise") {
    const MechanicalSusceptibility s(1.0, 1.0, 0.05);

    SUBCASE("uncorrelated vacuum probe minimized over K0 gives the sql") {
        for (double w : {0.3, 1.0, 2.5}) {
            const double chi_abs = std::abs(chi_mech(s, w));
            // optimal K0 for P = Q = 1/2, S = 0
            const double k0 = 1.0 / (2.0 * std::sqrt(chi_abs));
            const ProbeState probe = ProbeState::vacuum(k0);
            CHECK(measured_position_noise(probe, s, w) ==
                  doctest::Approx(sql_bound(s, w)).epsilon(1e-12));
            // and any other K0 does worse
            for (double detune : {0.5, 2.0}) {
                ProbeState off = probe;
                off.k0 = k0 * detune;
                CHECK(measured_position_noise(off, s, w) >= sql_bound(s, w));
            }
        }
    }

    SUBCASE("Heisenberg-violating probes are rejected") {
        const ProbeState bad{1.0, 0.5, 0.0, 0.0}; // sigma_II = 0 with finite sigma_phiphi
        CHECK_THROWS_AS(measured_position_noise(bad, s, 1.0), invalid_input);
        const ProbeState bad2{1.0, 0.5, 0.5, 0.49};
        CHECK_THROWS_AS(measured_position_noise(bad2, s, 1.0), invalid_input);
    }

    SUBCASE("every admissible probe sits above the uql") {
        std::mt19937 rng(31415);
        std::uniform_real_distribution<double> logu(-2.0, 2.0);
        std::uniform_real_distribution<double> su(-3.0, 3.0);
        for (double w : {0.4, 1.0, 1.7}) {
            const double floor = uql_bound(s, w);
            for (int trial = 0; trial < 1000; ++trial) {
                const double corr = su(rng);
                const double pq = 0.25 + corr * corr;
                const double split = std::pow(10.0, logu(rng));
                ProbeState probe;
                probe.sigma_phiphi = std::sqrt(pq) * split * (1.0 + 1e-9);
                probe.sigma_ii = std::sqrt(pq) / split * (1.0 + 1e-9);
                probe.sigma_phii = corr;
                probe.k0 = std::pow(10.0, logu(rng));
                REQUIRE(probe.admissible());
                CHECK(measured_position_noise(probe, s, w) >= floor * (1.0 - 1e-10));
            }
        }
    }
}

TEST_CASE("optimize_probe") {
    const MechanicalSusceptibility s(1.0, 1.0, 0.05);

    SUBCASE("reaches the correlated floor away from pathological points") {
        for (double w : {0.3, 0.95, 1.0, 1.05, 2.2}) {
            const ProbeState probe = optimize_probe(s, w);
            CHECK(probe.admissible());
            // saturates the Heisenberg boundary
            CHECK(probe.sigma_phiphi * probe.sigma_ii - probe.sigma_phii * probe.sigma_phii ==
                  doctest::Approx(0.25).epsilon(1e-12));
            const double achieved = measured_position_noise(probe, s, w);
            CHECK(achieved == doctest::Approx(uql_bound(s, w)).epsilon(1e-6));
        }
    }

    SUBCASE("at resonance the optimal probe is uncorrelated vacuum") {
        const ProbeState probe = optimize_probe(s, 1.0);
        CHECK(probe.sigma_phii == doctest::Approx(0.0));
        CHECK(probe.sigma_phiphi == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(measured_position_noise(probe, s, 1.0) ==
              doctest::Approx(sql_bound(s, 1.0)).epsilon(1e-9));
    }

    SUBCASE("at omega = 0 the squeezing cap binds and the noise is 60 dB under the sql") {
        const ProbeState probe = optimize_probe(s, 0.0);
        CHECK(probe.admissible());
        const double achieved = measured_position_noise(probe, s, 0.0);
        CHECK(uql_bound(s, 0.0) == 0.0);
        // the capped value suffers benign cancellation, so compare loosely
        // but in relative terms
        CHECK(achieved == doctest::Approx(sql_bound(s, 0.0) * 1e-6).epsilon(1e-3).scale(0.0));
    }

    SUBCASE("closed form matches a two-parameter grid-search oracle") {
        const double w = 0.6;
        const double ideal = uql_bound(s, w);
        const ProbeState closed = optimize_probe(s, w);
        const double closed_noise = measured_position_noise(closed, s, w);

        // oracle: nested grid refinement over (S, log K0) on the saturated
        // boundary with P = Q. The incumbent survives across levels; a box
        // slides when its best point lands on an edge and shrinks otherwise.
        double best = 1e300, best_s = 0.0, best_k = 0.0;
        double s_lo = -40.0, s_hi = 40.0;
        double k_lo = -3.0, k_hi = 3.0;
        for (int level = 0; level < 16; ++level) {
            int bi = -1, bj = -1;
            for (int i = 0; i <= 80; ++i) {
                const double corr = s_lo + (s_hi - s_lo) * i / 80.0;
                const double pq = std::sqrt(0.25 + corr * corr);
                for (int j = 0; j <= 80; ++j) {
                    const double k0 = std::pow(10.0, k_lo + (k_hi - k_lo) * j / 80.0);
                    const ProbeState probe{k0, pq, pq, corr};
                    const double noise = measured_position_noise(probe, s, w);
                    if (noise < best) {
                        best = noise;
                        best_s = corr;
                        best_k = std::log10(k0);
                        bi = i;
                        bj = j;
                    }
                }
            }
            const double ws = s_hi - s_lo, wk = k_hi - k_lo;
            if (bi >= 0 && (bi <= 1 || bi >= 79)) {
                s_lo = best_s - ws / 2;
                s_hi = best_s + ws / 2;
            } else {
                s_lo = best_s - ws / 40;
                s_hi = best_s + ws / 40;
            }
            if (bj >= 0 && (bj <= 1 || bj >= 79)) {
                k_lo = best_k - wk / 2;
                k_hi = best_k + wk / 2;
            } else {
                k_lo = best_k - wk / 40;
                k_hi = best_k + wk / 40;
            }
        }
        CHECK(best == doctest::Approx(ideal).epsilon(1e-6));
        CHECK(closed_noise == doctest::Approx(best).epsilon(1e-6));
    }
}
