#pragma once

#include "qvac/spectra.hpp"
#include "qvac/units.hpp"

#include <complex>
#include <optional>
#include <string>

namespace qvac::mirror {

/// Elastically anchored scatterer. When bare_mass is set, mass is the bare
/// parameter entering the mechanical response denominator.
struct OscillatorModel {
    double mass;
    double omega0;
    bool bare_mass = true;

    OscillatorModel(double m, double w0, bool bare = true);
};

/// Force susceptibility of the scatterer in vacuum.
///
/// perfect_mirror: chi_FF = i (hbar / 6 pi c^2) w^3, the reactive part set to
/// zero by subtraction (the dispersion reconstruction fixes it only up to
/// subtractions; zero is the minimal choice).
///
/// cutoff: chi_FF = i (hbar / 6 pi c^2) w^3 / (1 - i w / W_c)^3, a cubed
/// one-pole low-pass, analytic in the upper half-plane; its imaginary part
/// reduces to the perfect-mirror commutator spectrum for w << W_c. Note the
/// imaginary part changes sign above w = W_c/sqrt(3), so passivity statements
/// only apply below that frequency.
struct ForceSusceptibilityModel {
    enum class Kind { perfect_mirror, cutoff };

    Kind kind = Kind::perfect_mirror;
    double cutoff = 0.0; // only meaningful for Kind::cutoff

    static ForceSusceptibilityModel perfect();
    static ForceSusceptibilityModel with_cutoff(double cutoff_frequency);
};

/// Motional force susceptibility chi_FF at a single frequency.
std::complex<double> chi_ff(const ForceSusceptibilityModel& model, double omega,
                            UnitSystem units = UnitSystem::natural);

/// Mechanical response chi_qq[w] = 1 / (m0 (w0^2 - w^2) - chi_FF[w]).
/// An empty force model means the decoupled free oscillator.
/// Throws singularity_error on an exact pole.
std::complex<double> chi_qq(const OscillatorModel& osc,
                            const std::optional<ForceSusceptibilityModel>& force_model,
                            double omega, UnitSystem units = UnitSystem::natural);

/// Position noise spectrum of the vacuum-driven scatterer,
///   C_qq[w] = 2 hbar theta(w) Im chi_qq[w].
/// Computed both directly and through |chi_qq|^2 C_FF; the two routes must
/// agree to 1e-10 relative. Grid points within 1e-12 of a real pole are
/// rejected with singularity_error naming the point.
spectra::Spectrum langevin_position_spectrum(
    const OscillatorModel& osc, const std::optional<ForceSusceptibilityModel>& force_model,
    const spectra::FrequencyGrid& grid, UnitSystem units = UnitSystem::natural);

/// Free-mirror position diffusion background, order of magnitude only:
///   C_qq[w] ~ lambda_C^2 theta(w)/w with lambda_C = hbar/(m c).
double compton_background(double mass, double omega, UnitSystem units = UnitSystem::natural);

/// Result of the dispersion-relation consistency check.
struct CausalityReport {
    std::string model;            // "perfect-mirror", "cutoff", "none"
    bool causal = false;          // does a causal mechanical description exist
    bool dispersion_checked = false;
    double max_rel_discrepancy = 0.0; // vs |chi_FF|, over the probed points
    std::string note;
};

/// Verifies the once-subtracted dispersion relation
///   Re chi(w) = (2 w^2 / pi) P int_0^inf Im chi(w') / (w' (w'^2 - w^2)) dw'
/// for the cutoff model over the interior of the supplied grid. The
/// perfect-mirror model is reported non-causal (its w^3 growth admits no
/// causal mechanical equation of motion); an absent model is trivially
/// consistent.
CausalityReport causality_check(const std::optional<ForceSusceptibilityModel>& force_model,
                                const spectra::FrequencyGrid& grid,
                                UnitSystem units = UnitSystem::natural);

} // namespace qvac::mirror
