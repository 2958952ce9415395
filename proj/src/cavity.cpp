#include "qvac/cavity.hpp"

#include "qvac/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qvac::cavity {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double resonance_rel_tol = 1e-6;
} // namespace

Cavity::Cavity(double r1_, double r2_, double length_, UnitSystem units)
    : r1(r1_), r2(r2_), length(length_) {
    if (!(r1 >= 0.0 && r1 < 1.0) || !(r2 >= 0.0 && r2 < 1.0))
        throw invalid_input("amplitude reflectivities must lie in [0, 1)");
    if (!(r1 * r2 < 1.0))
        throw invalid_input("round-trip reflectivity r1 r2 must stay below 1");
    if (!(length > 0.0))
        throw invalid_input("cavity length must be positive");
    tau = length / light_speed(units);
    const double r = r1 * r2;
    finesse = pi * std::sqrt(r) / (1.0 - r);
}

MotionSpec::MotionSpec(Mode mode_, double omega_, double amplitude_, double duration_,
                       UnitSystem units)
    : mode(mode_), omega(omega_), amplitude(amplitude_), duration(duration_) {
    if (!(omega > 0.0))
        throw invalid_input("drive frequency must be positive");
    if (!(amplitude >= 0.0))
        throw invalid_input("drive amplitude must be nonnegative");
    if (!(duration > 0.0))
        throw invalid_input("drive duration must be positive");
    const double peak_velocity = omega * amplitude;
    if (!(peak_velocity < light_speed(units)))
        throw invalid_input("peak mirror velocity omega * amplitude must stay below c");
}

double airy_buildup(const Cavity& cav, double omega) {
    const double r = cav.round_trip_reflectivity();
    const double c = std::cos(2.0 * omega * cav.tau);
    return (1.0 - r * r) / (1.0 - 2.0 * r * c + r * r);
}

std::vector<Resonance> resonance_frequencies(const Cavity& cav, int n_max) {
    if (n_max < 2)
        throw invalid_input("motional resonances start at n = 2");
    std::vector<Resonance> out;
    out.reserve(static_cast<std::size_t>(n_max - 1));
    for (int n = 2; n <= n_max; ++n)
        out.push_back({n, n * pi / cav.tau, n % 2 == 0});
    return out;
}

Resonance matched_resonance(const Cavity& cav, const MotionSpec& motion) {
    const double ratio = motion.omega * cav.tau / pi;
    const int n = static_cast<int>(std::lround(ratio));
    const double omega_n = n * pi / cav.tau;
    if (n < 2 || std::abs(motion.omega - omega_n) > resonance_rel_tol * motion.omega) {
        std::ostringstream os;
        os << "drive frequency " << motion.omega
           << " is not a motional resonance: need omega = n pi/tau with n >= 2 "
           << "(tau = " << cav.tau << ")";
        throw domain_error(os.str());
    }
    const bool even = n % 2 == 0;
    const bool wants_even = motion.mode == MotionSpec::Mode::elongation;
    if (even != wants_even) {
        std::ostringstream os;
        os << "parity mismatch: n = " << n << " is excited by "
           << (even ? "elongation (even n)" : "translation (odd n)") << " but the drive is "
           << to_string(motion.mode);
        throw domain_error(os.str());
    }
    return {n, omega_n, even};
}

double radiated_photons(const Cavity& cav, const MotionSpec& motion, UnitSystem units) {
    (void)matched_resonance(cav, motion);
    const double c = light_speed(units);
    const double v = motion.omega * motion.amplitude;
    const double cycles = motion.omega * motion.duration / (2.0 * pi);
    return cycles * (v / c) * (v / c) * cav.finesse;
}

const char* to_string(MotionSpec::Mode mode) {
    return mode == MotionSpec::Mode::elongation ? "elongation" : "translation";
}

MotionSpec::Mode motion_mode_from_string(const std::string& s) {
    if (s == "elongation")
        return MotionSpec::Mode::elongation;
    if (s == "translation")
        return MotionSpec::Mode::translation;
    throw invalid_input("unknown motion mode: " + s + " (expected elongation or translation)");
}

} // namespace qvac::cavity
