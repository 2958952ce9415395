#pragma once

#include "qvac/units.hpp"

#include <string>
#include <vector>

namespace qvac::cavity {

/// Fabry-Perot cavity with amplitude reflectivities r1, r2 in [0,1) and
/// length L. tau is the one-way propagation time, finesse the usual
/// pi sqrt(r1 r2) / (1 - r1 r2).
struct Cavity {
    double r1;
    double r2;
    double length;
    double tau;     // L / c
    double finesse; // pi sqrt(r1 r2) / (1 - r1 r2)

    Cavity(double r1, double r2, double length, UnitSystem units = UnitSystem::natural);

    double round_trip_reflectivity() const { return r1 * r2; }
};

/// Harmonic mirror motion: elongation modulates the cavity length, translation
/// moves the cavity as a whole. Peak velocity omega * amplitude must stay
/// below c.
struct MotionSpec {
    enum class Mode { elongation, translation };

    Mode mode;
    double omega;     // drive frequency
    double amplitude; // length units
    double duration;  // time units

    MotionSpec(Mode mode, double omega, double amplitude, double duration,
               UnitSystem units = UnitSystem::natural);
};

/// Intracavity intensity buildup versus field frequency,
///   g[w] = (1 - r^2) / (1 - 2 r cos(2 w tau) + r^2),  r = r1 r2.
/// Periodic with period pi/tau; peaks at (1+r)/(1-r) on resonance.
double airy_buildup(const Cavity& cav, double omega);

struct Resonance {
    int n;
    double omega;  // n pi / tau
    bool even;     // even n: elongation modes, odd n: translation modes
};

/// Motional resonances w = n pi / tau for n = 2..n_max.
std::vector<Resonance> resonance_frequencies(const Cavity& cav, int n_max);

/// Expected number of photons radiated by harmonic mirror motion held for a
/// duration T on a motional resonance of matching parity:
///   N = (w T / 2 pi) (v/c)^2 F,  v = w a.
/// Off-resonance or parity-mismatched drives raise domain_error.
double radiated_photons(const Cavity& cav, const MotionSpec& motion,
                        UnitSystem units = UnitSystem::natural);

/// Resonance the motion locks onto (used by radiated_photons and the CLI).
Resonance matched_resonance(const Cavity& cav, const MotionSpec& motion);

const char* to_string(MotionSpec::Mode mode);
MotionSpec::Mode motion_mode_from_string(const std::string& s);

} // namespace qvac::cavity
