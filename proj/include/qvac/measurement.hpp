#pragma once

#include "qvac/units.hpp"

#include <complex>

namespace qvac::measurement {

/// Damped mechanical oscillator, chi_qq = 1/(m (w0^2 - w^2 - i gamma w)).
struct MechanicalSusceptibility {
    double mass;
    double omega0;
    double gamma;

    MechanicalSusceptibility(double m, double w0, double g);
};

std::complex<double> chi_mech(const MechanicalSusceptibility& s, double omega);

/// Stationary phase/intensity noise state of the probe field at one analysis
/// frequency. Conventions: vacuum has sigma_phiphi = sigma_ii = 1/2,
/// sigma_phii = 0, and admissible states obey
///   sigma_phiphi * sigma_ii - sigma_phii^2 >= 1/4.
struct ProbeState {
    double k0;          // mean wave-vector of the incident field
    double sigma_phiphi;
    double sigma_ii;
    double sigma_phii;

    bool admissible() const;
    static ProbeState vacuum(double k0);
};

/// Spectral density of the added position noise for an interferometric
/// readout.
///
/// The inferred position is q = phi/(2 K0), so phase noise enters as
/// sigma_phiphi/(4 K0^2). Each reflected photon transfers momentum 2 hbar K0,
/// so intensity noise drives the mirror through chi_qq and appears as
/// 4 hbar^2 K0^2 |chi_qq|^2 sigma_ii. The interference of the two routes picks
/// up the in-phase (reactive) part of the response, giving the cross term
/// 2 hbar Re(chi_qq) sigma_phii; with that structure an optimally
/// anti-correlated probe cancels the reactive contribution entirely and the
/// floor drops to hbar |Im chi_qq| (see optimize_probe):
///
///   sigma_qq = sigma_phiphi/(4 K0^2) + 4 hbar^2 K0^2 |chi|^2 sigma_ii
///              + 2 hbar Re(chi) sigma_phii
///
/// Minimizing over K0 at fixed probe gives 2 hbar |chi| sqrt(PQ) + cross term;
/// on the Heisenberg boundary PQ = 1/4 + S^2 the minimum over S lands exactly
/// on hbar |Im chi|.
double measured_position_noise(const ProbeState& probe, const MechanicalSusceptibility& s,
                               double omega, UnitSystem units = UnitSystem::natural);

/// Uncorrelated-probe floor: hbar |chi_qq|.
double sql_bound(const MechanicalSusceptibility& s, double omega,
                 UnitSystem units = UnitSystem::natural);

/// Correlated-probe floor: hbar |Im chi_qq|.
double uql_bound(const MechanicalSusceptibility& s, double omega,
                 UnitSystem units = UnitSystem::natural);

/// Squeezing allowed in optimize_probe, as a power ratio: the squeezed
/// quadrature eigenvalue may not drop below vacuum/10^(dB/10).
inline constexpr double squeezing_cap_db = 60.0;

/// Heisenberg-saturating probe whose measured noise reaches the correlated
/// floor hbar |Im chi_qq| wherever that requires at most squeezing_cap_db of
/// squeezing; beyond the cap the correlation is clamped to the boundary and
/// the returned probe attains the best capped value. Closed form:
///   rho = Re chi / |chi|,  S = -rho / (2 sqrt(1 - rho^2)),
///   P = Q = sqrt(1/4 + S^2), K0 = 1/(2 sqrt(hbar |chi|)).
ProbeState optimize_probe(const MechanicalSusceptibility& s, double omega,
                          UnitSystem units = UnitSystem::natural);

} // namespace qvac::measurement
