#include "qvac/gravity.hpp"

#include "qvac/errors.hpp"
#include "qvac/minkowski.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qvac::gravity {

namespace {

constexpr double pi = std::numbers::pi;

void check_index(int mu) {
    if (mu < 0 || mu > 3)
        throw invalid_input("tensor index out of range [0,3]");
}

double planck_length_for(UnitSystem units) {
    return units == UnitSystem::natural ? 1.0 : planck_units().length;
}

/// Rc_lmrn = (k_l k_r eta_mn + k_m k_n eta_lr - k_m k_r eta_ln - k_l k_n eta_mr)/2
double curvature_kernel(const spectra::WaveFourVector& k, int l, int m, int r, int n) {
    const double kl = k.lower(l), km = k.lower(m), kr = k.lower(r), kn = k.lower(n);
    return 0.5 * (kl * kr * metric(m, n) + km * kn * metric(l, r) - km * kr * metric(l, n) -
                  kl * kn * metric(m, r));
}

} // namespace

PlanckScales planck_units() {
    const auto& cd = codata();
    return {std::sqrt(cd.hbar * cd.c / cd.G),
            std::sqrt(cd.hbar * cd.G / (cd.c * cd.c * cd.c))};
}

MetricPerturbation MetricPerturbation::from_components(
    const std::array<std::array<std::complex<double>, 4>, 4>& h) {
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            if (h[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] !=
                h[static_cast<std::size_t>(nu)][static_cast<std::size_t>(mu)])
                throw invalid_input("metric perturbation must be symmetric");
    MetricPerturbation out;
    out.h_ = h;
    return out;
}

std::complex<double> MetricPerturbation::operator()(int mu, int nu) const {
    check_index(mu);
    check_index(nu);
    return h_[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
}

void MetricPerturbation::set(int mu, int nu, std::complex<double> value) {
    check_index(mu);
    check_index(nu);
    h_[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] = value;
    h_[static_cast<std::size_t>(nu)][static_cast<std::size_t>(mu)] = value;
}

std::complex<double> riemann_linearized(const MetricPerturbation& h,
                                        const spectra::WaveFourVector& k,
                                        const std::array<int, 4>& indices) {
    const int l = indices[0], m = indices[1], r = indices[2], n = indices[3];
    check_index(l);
    check_index(m);
    check_index(r);
    check_index(n);
    const double kl = k.lower(l), km = k.lower(m), kr = k.lower(r), kn = k.lower(n);
    return 0.5 * (km * kn * h(r, l) + kr * kl * h(m, n) - km * kr * h(n, l) - kn * kl * h(m, r));
}

double riemann_vacuum_spectrum(const spectra::WaveFourVector& k, const std::array<int, 8>& indices,
                               UnitSystem units, double technique_factor) {
    for (int idx : indices)
        check_index(idx);
    const double k2 = k.squared();
    if (!(k.k0 > 0.0)) {
        std::ostringstream os;
        os << "curvature correlation density lives on positive frequencies; got k0 = " << k.k0;
        throw domain_error(os.str());
    }
    if (std::abs(k2) > 1e-10 * k.k0 * k.k0) {
        std::ostringstream os;
        os << "wave vector is off the light cone: k^2 = " << k2 << " at k0 = " << k.k0;
        throw domain_error(os.str());
    }
    const int l = indices[0], m = indices[1], r = indices[2], n = indices[3];
    const int lp = indices[4], mp = indices[5], rp = indices[6], np = indices[7];
    const double lp2 = planck_length_for(units) * planck_length_for(units);
    const double combination = curvature_kernel(k, l, m, lp, mp) * curvature_kernel(k, r, n, rp, np) +
                               curvature_kernel(k, l, m, rp, np) * curvature_kernel(k, r, n, lp, mp) -
                               curvature_kernel(k, l, m, r, n) * curvature_kernel(k, lp, mp, rp, np);
    return 16.0 * pi * pi * lp2 * technique_factor * combination;
}

double geodesic_noise(double omega, UnitSystem units, double technique_factor) {
    const double lp = planck_length_for(units);
    const double planck_frequency = light_speed(units) / lp;
    if (!(std::abs(omega) < planck_frequency)) {
        std::ostringstream os;
        os << "geodesic noise spectrum holds below the Planck frequency " << planck_frequency
           << "; got omega = " << omega;
        throw domain_error(os.str());
    }
    if (omega <= 0.0)
        return 0.0;
    return technique_factor * lp * lp / omega;
}

Regime regime_classifier(double mass_kg) {
    if (!(mass_kg > 0.0))
        throw invalid_input("mass must be positive");
    const double m_p = planck_units().mass;
    if (std::abs(mass_kg - m_p) <= 1e-6 * m_p)
        return Regime::crossover;
    return mass_kg < m_p ? Regime::compton_dominated : Regime::planck_dominated;
}

const char* to_string(Regime r) {
    switch (r) {
    case Regime::compton_dominated: return "compton-dominated";
    case Regime::planck_dominated: return "planck-dominated";
    default: return "crossover";
    }
}

} // namespace qvac::gravity
