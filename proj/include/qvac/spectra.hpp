#pragma once

#include "qvac/units.hpp"

#include <array>
#include <complex>
#include <utility>
#include <vector>

namespace qvac::spectra {

enum class GridSpacing { linear, logarithmic };

/// Ordered frequency grid. Log grids must be strictly positive.
class FrequencyGrid {
public:
    static FrequencyGrid linear(double start, double stop, std::size_t count);
    static FrequencyGrid logspace(double start, double stop, std::size_t count);
    static FrequencyGrid from_points(std::vector<double> points, GridSpacing spacing);

    const std::vector<double>& points() const { return points_; }
    GridSpacing spacing() const { return spacing_; }
    std::size_t size() const { return points_.size(); }
    double operator[](std::size_t i) const { return points_[i]; }

    bool operator==(const FrequencyGrid& other) const = default;

private:
    FrequencyGrid(std::vector<double> pts, GridSpacing sp);
    std::vector<double> points_;
    GridSpacing spacing_;
};

/// Complex-valued function sampled on a FrequencyGrid, tagged with the unit
/// system its values were produced in.
struct Spectrum {
    FrequencyGrid grid;
    std::vector<std::complex<double>> values;
    UnitSystem units = UnitSystem::natural;

    Spectrum(FrequencyGrid g, std::vector<std::complex<double>> v,
             UnitSystem u = UnitSystem::natural);

    std::size_t size() const { return values.size(); }
};

/// Builds a spectrum by evaluating fn at every grid point.
template <typename Fn>
Spectrum evaluate_on_grid(const FrequencyGrid& grid, Fn&& fn,
                          UnitSystem units = UnitSystem::natural) {
    std::vector<std::complex<double>> v;
    v.reserve(grid.size());
    for (double w : grid.points())
        v.emplace_back(fn(w));
    return Spectrum(grid, std::move(v), units);
}

/// Thermal equilibrium state. beta = hbar/(k_B T); +infinity encodes vacuum.
struct ThermalState {
    double beta;

    explicit ThermalState(double b);
    static ThermalState vacuum();
    bool is_vacuum() const;
};

/// Wave four-vector, contravariant components, signature diag(+,-,-,-).
struct WaveFourVector {
    double k0 = 0, k1 = 0, k2 = 0, k3 = 0;

    double operator[](int mu) const;
    /// Covariant component k_mu.
    double lower(int mu) const;
    /// k.k = k0^2 - k1^2 - k2^2 - k3^2.
    double squared() const;
};

// Heaviside and sign functions with the symmetric regularization
// theta(0) = 1/2, sign(0) = 0 used by every spectral formula here.
double unit_step(double w);
double sign_function(double w);

/// Splits forward/backward correlation spectra into anticommutator (sigma)
/// and commutator (xi) parts:
///   2 hbar sigma = C_fwd + C_bwd,   2 hbar xi = C_fwd - C_bwd.
/// C_bwd must be supplied already sampled at the reversed argument, on the
/// same grid as C_fwd.
std::pair<Spectrum, Spectrum> decompose_correlation(const Spectrum& c_forward,
                                                    const Spectrum& c_backward);

/// Planck-law fluctuation-dissipation relation:
///   C[w] = 2 hbar xi[w] / (1 - exp(-beta w)).
/// At an exact grid point w = 0, xi(0) must vanish; the value is then the
/// limit 2 hbar xi'(0)/beta using a finite-difference slope from the
/// neighboring grid points.
Spectrum thermal_fd(const Spectrum& xi, const ThermalState& state);

/// Zero-temperature relations: C = 2 hbar theta(w) xi, sigma = sign(w) xi.
std::pair<Spectrum, Spectrum> vacuum_fd(const Spectrum& xi);

/// Temperature seen in place of vacuum at proper acceleration a:
///   T = hbar a / (2 pi k_B c); natural mode returns a / (2 pi).
double unruh_temperature(double acceleration, UnitSystem units);

/// Position-domain vacuum correlation of the potential, component (mu, nu):
///   (hbar/pi) eta_{mu nu} / ((x0 - i eps)^2 - r^2),  eps > 0.
std::complex<double> field_correlation_position(double x0, const std::array<double, 3>& xvec,
                                                double eps, int mu, int nu,
                                                UnitSystem units = UnitSystem::natural);

/// Momentum-domain commutator density of the potential on the positive-
/// frequency mass shell, with the on-shell delta stripped: pi * eta_{mu nu}.
/// (The delta factor is never evaluated pointwise; callers integrate it out.)
double field_commutator_momentum_density(int mu, int nu);

/// Transverse projector pi_{mu nu} = eta_{mu nu} - k_mu k_nu / k^2.
/// Requires k off the light cone.
double stress_projector2(const WaveFourVector& k, int mu, int nu);

/// Traceless rank-4 projector
///   pi_{mu nu rho sigma} = (pi_{mu rho} pi_{nu sigma} + pi_{mu sigma} pi_{nu rho})/2
///                          - pi_{mu nu} pi_{rho sigma}/3.
double stress_projector4(const WaveFourVector& k, int mu, int nu, int rho, int sigma);

/// Vacuum stress-tensor spectral density
///   (hbar^2 / 40 pi) (k^2)^2 pi_{mu nu rho sigma},
/// supported on k^2 > 0, k0 > 0; outside the support the value is 0.
double stress_spectrum(const WaveFourVector& k, const std::array<int, 4>& indices,
                       UnitSystem units = UnitSystem::natural);

/// Incoming-field momentum density fluctuations in 1+1 dimensions:
///   C_pp[w] = (hbar^2 / 12 pi) theta(w) w^3.
double momentum_density_spectrum(double omega, UnitSystem units = UnitSystem::natural);

/// Radiation-pressure fluctuations on a perfectly reflecting point scatterer
/// (all incoming momentum reflected, so twice the momentum density in
/// amplitude): C_FF[w] = (hbar^2 / 3 pi c^2) theta(w) w^3.
double force_spectrum_perfect_mirror(double omega, UnitSystem units = UnitSystem::natural);

} // namespace qvac::spectra
