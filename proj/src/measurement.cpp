#include "qvac/measurement.hpp"

#include "qvac/errors.hpp"

#include <cmath>
#include <sstream>

namespace qvac::measurement {

MechanicalSusceptibility::MechanicalSusceptibility(double m, double w0, double g)
    : mass(m), omega0(w0), gamma(g) {
    if (!(m > 0.0))
        throw invalid_input("mass must be positive");
    if (!(w0 >= 0.0))
        throw invalid_input("proper frequency must be nonnegative");
    if (!(g >= 0.0))
        throw invalid_input("damping coefficient must be nonnegative");
}

std::complex<double> chi_mech(const MechanicalSusceptibility& s, double omega) {
    const std::complex<double> den(s.mass * (s.omega0 * s.omega0 - omega * omega),
                                   -s.mass * s.gamma * omega);
    if (std::abs(den) == 0.0) {
        std::ostringstream os;
        os << "undamped mechanical response has a pole at omega = " << omega;
        throw singularity_error(os.str());
    }
    return 1.0 / den;
}

bool ProbeState::admissible() const {
    if (sigma_phiphi < 0.0 || sigma_ii < 0.0)
        return false;
    // The determinant check needs scale-aware slack: for strongly squeezed
    // states P Q - S^2 is a difference of large near-equal numbers.
    const double det = sigma_phiphi * sigma_ii - sigma_phii * sigma_phii;
    const double slack = 1e-9 * (0.25 + sigma_phiphi * sigma_ii);
    return det >= 0.25 - slack;
}

ProbeState ProbeState::vacuum(double k0) { return ProbeState{k0, 0.5, 0.5, 0.0}; }

double measured_position_noise(const ProbeState& probe, const MechanicalSusceptibility& s,
                               double omega, UnitSystem units) {
    if (!(probe.k0 > 0.0))
        throw invalid_input("probe mean wave-vector must be positive");
    if (!probe.admissible())
        throw invalid_input("probe violates the Heisenberg constraint "
                            "sigma_phiphi sigma_II - sigma_phiI^2 >= 1/4");
    const double hb = hbar(units);
    const std::complex<double> chi = chi_mech(s, omega);
    const double k2 = probe.k0 * probe.k0;
    return probe.sigma_phiphi / (4.0 * k2) + 4.0 * hb * hb * k2 * std::norm(chi) * probe.sigma_ii +
           2.0 * hb * chi.real() * probe.sigma_phii;
}

double sql_bound(const MechanicalSusceptibility& s, double omega, UnitSystem units) {
    return hbar(units) * std::abs(chi_mech(s, omega));
}

double uql_bound(const MechanicalSusceptibility& s, double omega, UnitSystem units) {
    return hbar(units) * std::abs(chi_mech(s, omega).imag());
}

ProbeState optimize_probe(const MechanicalSusceptibility& s, double omega, UnitSystem units) {
    const double hb = hbar(units);
    const std::complex<double> chi = chi_mech(s, omega);
    const double rho = chi.real() / std::abs(chi);

    // Optimal correlation on the Heisenberg boundary; clamp so the squeezed
    // quadrature eigenvalue sqrt(1/4 + S^2) - |S| never drops below the cap.
    const double lambda_min = 0.5 * std::pow(10.0, -squeezing_cap_db / 10.0);
    const double s_cap = (0.25 - lambda_min * lambda_min) / (2.0 * lambda_min);
    double corr;
    if (std::abs(rho) >= 1.0) {
        corr = -std::copysign(s_cap, rho);
    } else {
        corr = -rho / (2.0 * std::sqrt(1.0 - rho * rho));
        if (std::abs(corr) > s_cap)
            corr = std::copysign(s_cap, corr);
    }
    const double pq = std::sqrt(0.25 + corr * corr);

    ProbeState probe;
    probe.sigma_phiphi = pq;
    probe.sigma_ii = pq;
    probe.sigma_phii = corr;
    // K0 balancing the phase and backaction terms:
    // P/(4 K0^2) = 4 hbar^2 K0^2 |chi|^2 Q with P = Q.
    probe.k0 = 1.0 / (2.0 * std::sqrt(hb * std::abs(chi)));
    return probe;
}

} // namespace qvac::measurement
