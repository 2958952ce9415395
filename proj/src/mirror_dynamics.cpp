#include "qvac/mirror_dynamics.hpp"

#include "qvac/errors.hpp"
#include "quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qvac::mirror {

namespace {

constexpr double pi = std::numbers::pi;

std::complex<double> mechanical_denominator(const OscillatorModel& osc,
                                            const std::optional<ForceSusceptibilityModel>& model,
                                            double omega, UnitSystem units) {
    std::complex<double> den(osc.mass * (osc.omega0 * osc.omega0 - omega * omega), 0.0);
    if (model)
        den -= chi_ff(*model, omega, units);
    return den;
}

double denominator_scale(const OscillatorModel& osc,
                         const std::optional<ForceSusceptibilityModel>& model, double omega,
                         UnitSystem units) {
    double scale = osc.mass * (osc.omega0 * osc.omega0 + omega * omega);
    if (model)
        scale += std::abs(chi_ff(*model, omega, units));
    return scale;
}

} // namespace

OscillatorModel::OscillatorModel(double m, double w0, bool bare)
    : mass(m), omega0(w0), bare_mass(bare) {
    if (!(m > 0.0))
        throw invalid_input("oscillator mass must be positive");
    if (!(w0 >= 0.0))
        throw invalid_input("oscillator proper frequency must be nonnegative");
}

ForceSusceptibilityModel ForceSusceptibilityModel::perfect() {
    return ForceSusceptibilityModel{Kind::perfect_mirror, 0.0};
}

ForceSusceptibilityModel ForceSusceptibilityModel::with_cutoff(double cutoff_frequency) {
    if (!(cutoff_frequency > 0.0))
        throw invalid_input("cutoff frequency must be positive");
    return ForceSusceptibilityModel{Kind::cutoff, cutoff_frequency};
}

std::complex<double> chi_ff(const ForceSusceptibilityModel& model, double omega,
                            UnitSystem units) {
    const double c = light_speed(units);
    const double a = hbar(units) / (6.0 * pi * c * c);
    const std::complex<double> leading(0.0, a * omega * omega * omega);
    if (model.kind == ForceSusceptibilityModel::Kind::perfect_mirror)
        return leading;
    const std::complex<double> pole(1.0, -omega / model.cutoff);
    return leading / (pole * pole * pole);
}

std::complex<double> chi_qq(const OscillatorModel& osc,
                            const std::optional<ForceSusceptibilityModel>& force_model,
                            double omega, UnitSystem units) {
    const std::complex<double> den = mechanical_denominator(osc, force_model, omega, units);
    const double scale = denominator_scale(osc, force_model, omega, units);
    if (std::abs(den) <= 1e-12 * scale) {
        std::ostringstream os;
        os << "mechanical response has a pole at omega = " << omega;
        throw singularity_error(os.str());
    }
    return 1.0 / den;
}

spectra::Spectrum langevin_position_spectrum(
    const OscillatorModel& osc, const std::optional<ForceSusceptibilityModel>& force_model,
    const spectra::FrequencyGrid& grid, UnitSystem units) {
    const double hb = hbar(units);
    std::vector<std::complex<double>> values;
    values.reserve(grid.size());
    for (double w : grid.points()) {
        const std::complex<double> chi = chi_qq(osc, force_model, w, units);
        const double direct = 2.0 * hb * spectra::unit_step(w) * chi.imag();
        // second route: |chi_qq|^2 C_FF with C_FF = 2 hbar theta(w) Im chi_FF
        const double im_ff = force_model ? chi_ff(*force_model, w, units).imag() : 0.0;
        const double via_force = std::norm(chi) * 2.0 * hb * spectra::unit_step(w) * im_ff;
        const double tol = 1e-10 * std::max(std::abs(direct), std::abs(via_force));
        if (std::abs(direct - via_force) > tol) {
            std::ostringstream os;
            os << "fluctuation-dissipation cross-check failed at omega = " << w << ": " << direct
               << " vs " << via_force;
            throw error(os.str());
        }
        values.emplace_back(direct);
    }
    return spectra::Spectrum(grid, std::move(values), units);
}

double compton_background(double mass, double omega, UnitSystem units) {
    if (!(mass > 0.0))
        throw invalid_input("mass must be positive");
    if (omega < 0.0)
        return 0.0;
    if (omega == 0.0)
        throw singularity_error("position diffusion background diverges at omega = 0");
    const double lambda_c = hbar(units) / (mass * light_speed(units));
    return lambda_c * lambda_c / omega;
}

CausalityReport causality_check(const std::optional<ForceSusceptibilityModel>& force_model,
                                const spectra::FrequencyGrid& grid, UnitSystem units) {
    CausalityReport report;
    if (!force_model) {
        report.model = "none";
        report.causal = true;
        report.note = "zero susceptibility is trivially consistent";
        return report;
    }
    if (force_model->kind == ForceSusceptibilityModel::Kind::perfect_mirror) {
        report.model = "perfect-mirror";
        report.causal = false;
        report.note = "w^3 response with no cutoff: not causal as a mechanical equation "
                      "of motion (reactive part exists only through subtractions)";
        return report;
    }

    report.model = "cutoff";
    report.causal = true;
    report.dispersion_checked = true;

    const double w_min = grid.points().front();
    const double w_max = grid.points().back();
    if (!(w_min > 0.0))
        throw invalid_input("dispersion check needs a positive-frequency grid");
    const double upper = 1e4 * std::max(force_model->cutoff, w_max);

    auto im_part = [&](double w) { return chi_ff(*force_model, w, units).imag(); };

    // Probe interior points; the principal-value window needs room on both
    // sides of the pole.
    for (double w : grid.points()) {
        if (w < 4.0 * w_min || w > 0.25 * w_max)
            continue;
        auto regular = [&](double wp) { return im_part(wp) / (wp * (wp + w)); };
        const double half = 0.5 * w;
        double integral =
            detail::integrate_cauchy_pv([&](double wp) { return regular(wp); }, w - half,
                                        w + half, w, 1e-10);
        // panels away from the pole, split per decade for resolution
        auto plain = [&](double lo, double hi) {
            double acc = 0.0;
            double a = lo;
            while (a < hi) {
                const double b = std::min(hi, a * 10.0);
                acc += detail::integrate_adaptive(
                    [&](double wp) { return regular(wp) / (wp - w); }, a, b, 1e-11);
                a = b;
            }
            return acc;
        };
        integral += detail::integrate_adaptive(
            [&](double wp) { return regular(wp) / (wp - w); }, 0.0, w - half, 1e-11);
        integral += plain(w + half, upper);
        const double reconstructed = 2.0 * w * w / pi * integral;
        const std::complex<double> chi = chi_ff(*force_model, w, units);
        const double discrepancy = std::abs(reconstructed - chi.real()) / std::abs(chi);
        report.max_rel_discrepancy = std::max(report.max_rel_discrepancy, discrepancy);
    }
    std::ostringstream os;
    os << "once-subtracted dispersion relation verified; max relative discrepancy "
       << report.max_rel_discrepancy;
    report.note = os.str();
    return report;
}

} // namespace qvac::mirror
