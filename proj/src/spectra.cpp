#include "qvac/spectra.hpp"

#include "qvac/errors.hpp"
#include "qvac/minkowski.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace qvac::spectra {

namespace {

constexpr double pi = std::numbers::pi;

void check_index(int mu, const char* what) {
    if (mu < 0 || mu > 3)
        throw invalid_input(std::string(what) + " index out of range [0,3]");
}

double real_part_checked(const Spectrum& s, std::size_t i, double scale) {
    const auto v = s.values[i];
    if (std::abs(v.imag()) > 1e-12 * scale)
        throw invalid_input("spectrum expected to be real-valued has imaginary part at index " +
                            std::to_string(i));
    return v.real();
}

double max_abs(const Spectrum& s) {
    double m = 0.0;
    for (const auto& v : s.values)
        m = std::max(m, std::abs(v));
    return m;
}

} // namespace

FrequencyGrid::FrequencyGrid(std::vector<double> pts, GridSpacing sp)
    : points_(std::move(pts)), spacing_(sp) {
    if (points_.empty())
        throw invalid_input("frequency grid must be nonempty");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i]))
            throw invalid_input("frequency grid contains a non-finite point");
        if (i > 0 && points_[i] <= points_[i - 1])
            throw invalid_input("frequency grid must be strictly increasing");
        if (spacing_ == GridSpacing::logarithmic && points_[i] <= 0.0)
            throw invalid_input("logarithmic grid points must be positive");
    }
}

FrequencyGrid FrequencyGrid::linear(double start, double stop, std::size_t count) {
    if (count == 0)
        throw invalid_input("frequency grid must be nonempty");
    std::vector<double> pts(count);
    if (count == 1) {
        pts[0] = start;
        if (start != stop)
            throw invalid_input("single-point grid requires start == stop");
    } else {
        const double step = (stop - start) / static_cast<double>(count - 1);
        for (std::size_t i = 0; i < count; ++i)
            pts[i] = start + step * static_cast<double>(i);
        pts.back() = stop; // avoid rounding drift at the endpoint
    }
    return FrequencyGrid(std::move(pts), GridSpacing::linear);
}

FrequencyGrid FrequencyGrid::logspace(double start, double stop, std::size_t count) {
    if (start <= 0.0 || stop <= 0.0)
        throw invalid_input("logarithmic grid endpoints must be positive");
    if (count == 0)
        throw invalid_input("frequency grid must be nonempty");
    std::vector<double> pts(count);
    if (count == 1) {
        pts[0] = start;
        if (start != stop)
            throw invalid_input("single-point grid requires start == stop");
    } else {
        const double la = std::log(start), lb = std::log(stop);
        const double step = (lb - la) / static_cast<double>(count - 1);
        for (std::size_t i = 0; i < count; ++i)
            pts[i] = std::exp(la + step * static_cast<double>(i));
        pts.front() = start;
        pts.back() = stop;
    }
    return FrequencyGrid(std::move(pts), GridSpacing::logarithmic);
}

FrequencyGrid FrequencyGrid::from_points(std::vector<double> points, GridSpacing spacing) {
    return FrequencyGrid(std::move(points), spacing);
}

Spectrum::Spectrum(FrequencyGrid g, std::vector<std::complex<double>> v, UnitSystem u)
    : grid(std::move(g)), values(std::move(v)), units(u) {
    if (grid.size() != values.size())
        throw invalid_input("spectrum value count must match grid size");
}

ThermalState::ThermalState(double b) : beta(b) {
    if (!(b > 0.0))
        throw invalid_input("inverse temperature beta must be positive");
}

ThermalState ThermalState::vacuum() {
    return ThermalState(std::numeric_limits<double>::infinity());
}

bool ThermalState::is_vacuum() const { return std::isinf(beta); }

double WaveFourVector::operator[](int mu) const {
    check_index(mu, "wave vector");
    switch (mu) {
    case 0: return k0;
    case 1: return k1;
    case 2: return k2;
    default: return k3;
    }
}

double WaveFourVector::lower(int mu) const { return metric_diag(mu) * (*this)[mu]; }

double WaveFourVector::squared() const { return k0 * k0 - k1 * k1 - k2 * k2 - k3 * k3; }

double unit_step(double w) { return w > 0.0 ? 1.0 : (w < 0.0 ? 0.0 : 0.5); }

double sign_function(double w) { return w > 0.0 ? 1.0 : (w < 0.0 ? -1.0 : 0.0); }

std::pair<Spectrum, Spectrum> decompose_correlation(const Spectrum& c_forward,
                                                    const Spectrum& c_backward) {
    if (!(c_forward.grid == c_backward.grid))
        throw invalid_input("correlation decomposition requires both spectra on the same grid");
    if (c_forward.units != c_backward.units)
        throw invalid_input("correlation decomposition requires a consistent unit system");
    const double hb = hbar(c_forward.units);
    std::vector<std::complex<double>> sigma(c_forward.size()), xi(c_forward.size());
    for (std::size_t i = 0; i < c_forward.size(); ++i) {
        sigma[i] = (c_forward.values[i] + c_backward.values[i]) / (2.0 * hb);
        xi[i] = (c_forward.values[i] - c_backward.values[i]) / (2.0 * hb);
    }
    return {Spectrum(c_forward.grid, std::move(sigma), c_forward.units),
            Spectrum(c_forward.grid, std::move(xi), c_forward.units)};
}

Spectrum thermal_fd(const Spectrum& xi, const ThermalState& state) {
    const double hb = hbar(xi.units);
    const double scale = max_abs(xi);
    const auto& w = xi.grid.points();
    std::vector<std::complex<double>> out(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) {
        const double x = real_part_checked(xi, i, scale);
        if (w[i] == 0.0) {
            if (std::abs(x) > 1e-12 * scale)
                throw singularity_error(
                    "thermal fluctuation-dissipation relation is singular at omega = 0 "
                    "when xi(0) != 0");
            if (state.is_vacuum()) {
                out[i] = 0.0;
                continue;
            }
            // xi(0) = 0: limit value 2 hbar xi'(0)/beta with the slope taken
            // from the neighboring grid points.
            double slope;
            if (i > 0 && i + 1 < xi.size())
                slope = (real_part_checked(xi, i + 1, scale) - real_part_checked(xi, i - 1, scale)) /
                        (w[i + 1] - w[i - 1]);
            else if (i + 1 < xi.size())
                slope = (real_part_checked(xi, i + 1, scale) - x) / (w[i + 1] - w[i]);
            else if (i > 0)
                slope = (x - real_part_checked(xi, i - 1, scale)) / (w[i] - w[i - 1]);
            else
                throw invalid_input("cannot take the omega = 0 limit on a single-point grid");
            out[i] = 2.0 * hb * slope / state.beta;
            continue;
        }
        if (state.is_vacuum()) {
            out[i] = 2.0 * hb * unit_step(w[i]) * x;
            continue;
        }
        // 1 - exp(-beta w) via expm1 for small beta*w accuracy.
        const double denom = -std::expm1(-state.beta * w[i]);
        out[i] = 2.0 * hb * x / denom;
    }
    return Spectrum(xi.grid, std::move(out), xi.units);
}

std::pair<Spectrum, Spectrum> vacuum_fd(const Spectrum& xi) {
    const double hb = hbar(xi.units);
    const double scale = max_abs(xi);
    std::vector<std::complex<double>> c(xi.size()), sigma(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) {
        const double x = real_part_checked(xi, i, scale);
        const double w = xi.grid[i];
        c[i] = 2.0 * hb * unit_step(w) * x;
        sigma[i] = sign_function(w) * x;
    }
    return {Spectrum(xi.grid, std::move(c), xi.units),
            Spectrum(xi.grid, std::move(sigma), xi.units)};
}

double unruh_temperature(double acceleration, UnitSystem units) {
    if (!(acceleration >= 0.0))
        throw invalid_input("proper acceleration must be nonnegative");
    if (units == UnitSystem::natural)
        return acceleration / (2.0 * pi);
    const auto& cd = codata();
    return cd.hbar * acceleration / (2.0 * pi * cd.k_B * cd.c);
}

std::complex<double> field_correlation_position(double x0, const std::array<double, 3>& xvec,
                                                double eps, int mu, int nu, UnitSystem units) {
    if (!(eps > 0.0))
        throw invalid_input("regulator eps must be positive");
    check_index(mu, "metric");
    check_index(nu, "metric");
    if (mu != nu)
        return 0.0;
    const double r2 = xvec[0] * xvec[0] + xvec[1] * xvec[1] + xvec[2] * xvec[2];
    const std::complex<double> t(x0, -eps);
    return hbar(units) / pi * metric_diag(mu) / (t * t - r2);
}

double field_commutator_momentum_density(int mu, int nu) {
    check_index(mu, "metric");
    check_index(nu, "metric");
    return pi * metric(mu, nu);
}

double stress_projector2(const WaveFourVector& k, int mu, int nu) {
    check_index(mu, "projector");
    check_index(nu, "projector");
    const double k2 = k.squared();
    if (k2 == 0.0)
        throw singularity_error("transverse projector is undefined on the light cone (k^2 = 0)");
    return metric(mu, nu) - k.lower(mu) * k.lower(nu) / k2;
}

double stress_projector4(const WaveFourVector& k, int mu, int nu, int rho, int sigma) {
    const double p_mr = stress_projector2(k, mu, rho);
    const double p_ns = stress_projector2(k, nu, sigma);
    const double p_ms = stress_projector2(k, mu, sigma);
    const double p_nr = stress_projector2(k, nu, rho);
    const double p_mn = stress_projector2(k, mu, nu);
    const double p_rs = stress_projector2(k, rho, sigma);
    return 0.5 * (p_mr * p_ns + p_ms * p_nr) - p_mn * p_rs / 3.0;
}

double stress_spectrum(const WaveFourVector& k, const std::array<int, 4>& indices,
                       UnitSystem units) {
    const double k2 = k.squared();
    if (k.k0 <= 0.0 || k2 <= 0.0)
        return 0.0; // theta(omega) theta(k^2) support
    const double hb = hbar(units);
    return hb * hb / (40.0 * pi) * k2 * k2 *
           stress_projector4(k, indices[0], indices[1], indices[2], indices[3]);
}

double momentum_density_spectrum(double omega, UnitSystem units) {
    const double hb = hbar(units);
    return hb * hb / (12.0 * pi) * unit_step(omega) * omega * omega * omega;
}

double force_spectrum_perfect_mirror(double omega, UnitSystem units) {
    const double hb = hbar(units);
    const double c = light_speed(units);
    return hb * hb / (3.0 * pi * c * c) * unit_step(omega) * omega * omega * omega;
}

} // namespace qvac::spectra
