#pragma once

#include "qvac/jet.hpp"
#include "qvac/units.hpp"

#include <array>
#include <functional>
#include <memory>

namespace qvac::worldline {

enum class IndexPosition { contravariant, covariant };

/// Minkowski four-vector, signature diag(+,-,-,-). Raising/lowering flips the
/// spatial components and the index tag; applying it twice is the identity.
struct FourVector {
    std::array<double, 4> components{};
    IndexPosition position = IndexPosition::contravariant;

    double operator[](int mu) const { return components[static_cast<std::size_t>(mu)]; }
    double& operator[](int mu) { return components[static_cast<std::size_t>(mu)]; }

    FourVector with_flipped_index() const;
    FourVector lowered() const;
    FourVector raised() const;
};

/// eta_{mu nu} a^mu b^nu for two contravariant vectors.
double dot(const FourVector& a, const FourVector& b);

enum class Parameterization { proper_time, coordinate_time };
enum class DerivativeSource { analytic, finite_difference };

/// Parametric timelike trajectory with derivatives available to third order
/// in proper time.
///
/// Two derivative sources are supported. Analytic worldlines supply their
/// position as a function on order-4 Taylor jets, so every derivative is
/// propagated exactly. Finite-difference worldlines supply a plain position
/// function; derivatives come from 5-point central stencils with step
/// h = max(h0, h0 |lambda|). Third derivatives from stencils carry a noise
/// floor around 1e-3 h0 in double precision, so analytic sources are
/// preferred whenever tight kinematic tolerances matter.
class Worldline {
public:
    using JetFn = std::function<std::array<Jet4, 4>(const Jet4&)>;
    using PointFn = std::function<std::array<double, 4>(double)>;

    static Worldline analytic(JetFn position, Parameterization param);
    static Worldline finite_difference(PointFn position, Parameterization param,
                                       double step = 1e-4);

    /// x^mu at the given parameter value.
    std::array<double, 4> position(double lambda) const;
    /// Order-4 Taylor jets of x^mu around the given parameter value.
    std::array<Jet4, 4> jet(double lambda) const;

    Parameterization parameterization() const { return param_; }
    DerivativeSource derivative_source() const { return source_; }
    /// Stencil step at lambda (finite-difference source only).
    double step_at(double lambda) const;

    struct Impl; // opaque evaluation backend

private:
    friend Worldline map_worldline(const Worldline&, const FourVector&);
    friend double proper_time(const Worldline&, double, double);
    friend double parameter_at_proper_time(const Worldline&, double);
    std::shared_ptr<const Impl> impl_;
    Parameterization param_;
    DerivativeSource source_;
    Worldline(std::shared_ptr<const Impl> impl, Parameterization p, DerivativeSource s);
};

/// Proper time integral  int sqrt(eta_{mu nu} dx^mu dx^nu)  between two
/// parameter values, adaptive quadrature at relative tolerance 1e-10.
/// Throws kinematics_error if a spacelike or null segment is encountered.
double proper_time(const Worldline& w, double lambda0, double lambda1);

/// Velocity, acceleration and third derivative with respect to proper time,
/// evaluated by exact chain rule from the native parameterization.
struct ProperDerivatives {
    FourVector velocity;
    FourVector acceleration;
    FourVector jerk;
};
ProperDerivatives proper_derivatives(const Worldline& w, double lambda);

/// Abraham vector Gamma^mu = d^3x^mu/dtau^3 + (d^2x/dtau^2)^2 dx^mu/dtau.
/// The argument is proper time measured from lambda = 0 for coordinate-time
/// worldlines, and the native parameter otherwise.
FourVector abraham_vector(const Worldline& w, double tau);
/// Same, evaluated at a native parameter value without any root solve.
FourVector abraham_vector_at_parameter(const Worldline& w, double lambda);

/// Dissipative force on a perfect point scatterer in 1+1 vacuum:
///   F^mu = (hbar / 6 pi c^2) Gamma^mu.
FourVector radiation_reaction(const Worldline& w, double tau,
                              UnitSystem units = UnitSystem::natural);
FourVector radiation_reaction_at_parameter(const Worldline& w, double lambda,
                                           UnitSystem units = UnitSystem::natural);

/// Special conformal point map with acceleration four-vector a:
///   xbar^mu = (x^mu - a^mu x^2) / D(x),   D(x) = 1 - 2 a.x + a^2 x^2,
/// equivalent to xbar^mu/xbar^2 = x^mu/x^2 - a^mu away from the light cone.
/// Throws singularity_error when D(x) vanishes (point maps to infinity).
FourVector conformal_map(const FourVector& x, const FourVector& a);

/// Conformal image of a whole worldline, reparameterized by its own proper
/// time (zeroed at the image of lambda = 0). Crossing the singular locus
/// raises kinematics_error naming the offending parameter value.
Worldline map_worldline(const Worldline& w, const FourVector& a);

/// Native parameter value at which the accumulated proper time from
/// lambda = 0 equals tau.
double parameter_at_proper_time(const Worldline& w, double tau);

// Ready-made trajectories.

/// x = (t, q), fixed spatial point, coordinate-time parameterization.
Worldline rest_worldline(const std::array<double, 3>& q = {0.0, 0.0, 0.0});
/// x = (t, q + v t), |v| < 1, coordinate-time parameterization.
Worldline uniform_velocity_worldline(const std::array<double, 3>& v);
/// Uniformly accelerated motion along x:
///   x^0 = sinh(a tau)/a, x^1 = cosh(a tau)/a, proper-time parameterization.
Worldline hyperbolic_worldline(double acceleration);
/// Small oscillation x^1(t) = amplitude * sin(Omega t), coordinate time.
Worldline sinusoid_worldline(double amplitude, double omega);

} // namespace qvac::worldline
