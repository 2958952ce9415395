#pragma once

#include "qvac/spectra.hpp"
#include "qvac/units.hpp"

#include <array>
#include <complex>
#include <string>

namespace qvac::gravity {

/// Planck scales from hbar, c, G. The two definitions are tied together by
/// m_P l_P = hbar / c.
struct PlanckScales {
    double mass;   // sqrt(hbar c / G), kg
    double length; // sqrt(hbar G / c^3), m
};

PlanckScales planck_units();

/// Symmetric metric perturbation h_mu_nu at a fixed wave four-vector.
class MetricPerturbation {
public:
    MetricPerturbation() = default;
    /// Validates symmetry of the supplied components.
    static MetricPerturbation from_components(
        const std::array<std::array<std::complex<double>, 4>, 4>& h);

    std::complex<double> operator()(int mu, int nu) const;
    /// Sets h_mu_nu and h_nu_mu together.
    void set(int mu, int nu, std::complex<double> value);

private:
    std::array<std::array<std::complex<double>, 4>, 4> h_{};
};

/// Linearized curvature in the Fourier domain:
///   R_lmrn[k] = (k_m k_n h_rl + k_r k_l h_mn - k_m k_r h_nl - k_n k_l h_mr)/2.
std::complex<double> riemann_linearized(const MetricPerturbation& h,
                                        const spectra::WaveFourVector& k,
                                        const std::array<int, 4>& indices);

/// Zero-point curvature correlation density on the positive-frequency light
/// cone (the on-shell delta is stripped; k must satisfy |k^2|/k0^2 <= 1e-10
/// and k0 > 0):
///   16 pi^2 l_P^2 (Rc_lm l'm' Rc_rn r'n' + Rc_lm r'n' Rc_rn l'm'
///                  - Rc_lmrn Rc_l'm'r'n')
/// with Rc_lmrn = (k_l k_r eta_mn + k_m k_n eta_lr - k_m k_r eta_ln
///                 - k_l k_n eta_mr)/2.
/// Natural mode sets l_P = 1 (Planck units); technique_factor rescales the
/// overall normalization for specific probing schemes.
double riemann_vacuum_spectrum(const spectra::WaveFourVector& k,
                               const std::array<int, 8>& indices,
                               UnitSystem units = UnitSystem::si,
                               double technique_factor = 1.0);

/// Geodesic-distance noise from gravitational vacuum fluctuations:
///   C_qq[w] = l_P^2 theta(w) / w,
/// valid below the Planck frequency c/l_P (domain_error beyond). Natural mode
/// uses Planck units (l_P = 1, valid for |w| < 1).
double geodesic_noise(double omega, UnitSystem units = UnitSystem::si,
                      double technique_factor = 1.0);

enum class Regime { compton_dominated, planck_dominated, crossover };

/// Which fluctuation source dominates position noise for a test mass m (kg):
/// lambda_C > l_P (m < m_P) means the mass's own radiation-pressure diffusion
/// dominates; beyond the Planck mass the spacetime noise floor takes over.
/// Within 1e-6 relative of the Planck mass the call reports crossover.
Regime regime_classifier(double mass_kg);

const char* to_string(Regime r);

} // namespace qvac::gravity
