#include "qvac/worldline.hpp"

#include "qvac/errors.hpp"
#include "qvac/minkowski.hpp"
#include "quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace qvac::worldline {

namespace {

constexpr double pi = std::numbers::pi;

double scalar_value(double x) { return x; }
double scalar_value(const Jet4& x) { return x.value(); }

/// Special conformal map on any scalar ring with +,-,*,/ (doubles or jets).
/// The acceleration stays a plain double vector.
template <typename T>
std::array<T, 4> conformal_map_point(const std::array<T, 4>& x, const std::array<double, 4>& a,
                                     const char* singular_what) {
    T x2 = minkowski_square(x);
    T ax = x[0] * a[0] - x[1] * a[1] - x[2] * a[2] - x[3] * a[3];
    const double a2 = a[0] * a[0] - a[1] * a[1] - a[2] * a[2] - a[3] * a[3];
    T denom = 1.0 - 2.0 * ax + a2 * x2;
    const double scale = 1.0 + std::abs(2.0 * scalar_value(ax)) + std::abs(a2 * scalar_value(x2));
    if (std::abs(scalar_value(denom)) <= 1e-12 * scale)
        throw singularity_error(singular_what);
    std::array<T, 4> out;
    for (int mu = 0; mu < 4; ++mu)
        out[static_cast<std::size_t>(mu)] =
            (x[static_cast<std::size_t>(mu)] - a[static_cast<std::size_t>(mu)] * x2) / denom;
    return out;
}

} // namespace

FourVector FourVector::with_flipped_index() const {
    FourVector r = *this;
    for (int mu = 1; mu < 4; ++mu)
        r[mu] = -r[mu];
    r.position = position == IndexPosition::contravariant ? IndexPosition::covariant
                                                          : IndexPosition::contravariant;
    return r;
}

FourVector FourVector::lowered() const {
    return position == IndexPosition::covariant ? *this : with_flipped_index();
}

FourVector FourVector::raised() const {
    return position == IndexPosition::contravariant ? *this : with_flipped_index();
}

double dot(const FourVector& a, const FourVector& b) {
    const FourVector au = a.raised(), bu = b.raised();
    return minkowski_dot(au.components, bu.components);
}

// ---------------------------------------------------------------------------

struct Worldline::Impl {
    virtual ~Impl() = default;
    virtual std::array<Jet4, 4> jet(double lambda) const = 0;
    virtual std::array<double, 4> position(double lambda) const = 0;
    virtual double step(double) const { return 0.0; }
};

namespace {

struct AnalyticImpl final : Worldline::Impl {
    Worldline::JetFn fn;
    explicit AnalyticImpl(Worldline::JetFn f) : fn(std::move(f)) {}
    std::array<Jet4, 4> jet(double lambda) const override { return fn(Jet4::variable(lambda)); }
    std::array<double, 4> position(double lambda) const override {
        const auto j = jet(lambda);
        return {j[0].value(), j[1].value(), j[2].value(), j[3].value()};
    }
};

struct FiniteDifferenceImpl final : Worldline::Impl {
    Worldline::PointFn fn;
    double base_step;
    FiniteDifferenceImpl(Worldline::PointFn f, double h) : fn(std::move(f)), base_step(h) {
        if (!(h > 0.0))
            throw invalid_input("finite-difference step must be positive");
    }
    double step(double lambda) const override {
        return std::max(base_step, base_step * std::abs(lambda));
    }
    std::array<Jet4, 4> jet(double lambda) const override {
        const double h = step(lambda);
        std::array<std::array<double, 4>, 5> f;
        for (int m = -2; m <= 2; ++m)
            f[static_cast<std::size_t>(m + 2)] = fn(lambda + m * h);
        std::array<Jet4, 4> out;
        for (std::size_t mu = 0; mu < 4; ++mu) {
            const double fm2 = f[0][mu], fm1 = f[1][mu], f0 = f[2][mu], fp1 = f[3][mu],
                         fp2 = f[4][mu];
            // 5-point central stencils.
            const double d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
            const double d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
            const double d3 = (-fm2 + 2.0 * fm1 - 2.0 * fp1 + fp2) / (2.0 * h * h * h);
            const double d4 = (fm2 - 4.0 * fm1 + 6.0 * f0 - 4.0 * fp1 + fp2) / (h * h * h * h);
            out[mu].c = {f0, d1, d2 / 2.0, d3 / 6.0, d4 / 24.0};
        }
        return out;
    }
    std::array<double, 4> position(double lambda) const override { return fn(lambda); }
};

/// Speed dtau/dlambda as an order-3 jet; throws if the segment is not
/// timelike at the expansion point.
Jet4 speed_jet(const std::array<Jet4, 4>& x) {
    std::array<Jet4, 4> xdot;
    for (std::size_t mu = 0; mu < 4; ++mu)
        xdot[mu] = jet_derivative(x[mu]);
    const Jet4 s2 = minkowski_square(xdot);
    if (!(s2.value() > 0.0))
        throw kinematics_error("worldline segment is spacelike or null");
    return sqrt(s2);
}

double speed_value(const Worldline::Impl& impl, double lambda) {
    return speed_jet(impl.jet(lambda)).value();
}

double proper_time_impl(const Worldline::Impl& impl, double lambda0, double lambda1) {
    const double sign = lambda1 >= lambda0 ? 1.0 : -1.0;
    const double a = std::min(lambda0, lambda1), b = std::max(lambda0, lambda1);
    const double value = detail::integrate_adaptive(
        [&impl](double lam) { return speed_value(impl, lam); }, a, b, 1e-10);
    return sign * value;
}

double parameter_at_proper_time_impl(const Worldline::Impl& impl, double tau) {
    if (tau == 0.0)
        return 0.0;
    const auto accumulated = [&impl](double lam) { return proper_time_impl(impl, 0.0, lam); };
    const double tol = 1e-13 * (1.0 + std::abs(tau));
    // Bracket [lo, hi] with accumulated(lo) <= tau <= accumulated(hi).
    double lo = 0.0, hi = 0.0;
    const double s0 = speed_value(impl, 0.0);
    double guess = tau / s0;
    if (tau > 0.0) {
        hi = guess;
        for (int i = 0; accumulated(hi) < tau; ++i) {
            if (i > 200)
                throw kinematics_error("proper-time inversion failed to bracket the target");
            lo = hi;
            hi *= 2.0;
        }
    } else {
        lo = guess;
        for (int i = 0; accumulated(lo) > tau; ++i) {
            if (i > 200)
                throw kinematics_error("proper-time inversion failed to bracket the target");
            hi = lo;
            lo *= 2.0;
        }
    }
    double lam = guess;
    if (lam <= lo || lam >= hi)
        lam = 0.5 * (lo + hi);
    for (int iter = 0; iter < 100; ++iter) {
        const double f = accumulated(lam) - tau;
        if (std::abs(f) <= tol)
            return lam;
        if (f > 0.0)
            hi = lam;
        else
            lo = lam;
        const double newton = lam - f / speed_value(impl, lam);
        lam = (newton > lo && newton < hi) ? newton : 0.5 * (lo + hi);
    }
    throw kinematics_error("proper-time inversion did not converge");
}

/// Image of a base worldline under a conformal map, still parameterized by
/// the base parameter.
struct ConformalImageImpl final : Worldline::Impl {
    std::shared_ptr<const Worldline::Impl> base;
    std::array<double, 4> accel;
    ConformalImageImpl(std::shared_ptr<const Worldline::Impl> b, std::array<double, 4> a)
        : base(std::move(b)), accel(a) {}
    std::array<Jet4, 4> jet(double lambda) const override {
        try {
            return conformal_map_point(base->jet(lambda), accel, "singular locus");
        } catch (const singularity_error&) {
            std::ostringstream os;
            os << "conformal image crosses the singular locus near parameter " << lambda;
            throw kinematics_error(os.str());
        }
    }
    std::array<double, 4> position(double lambda) const override {
        try {
            return conformal_map_point(base->position(lambda), accel, "singular locus");
        } catch (const singularity_error&) {
            std::ostringstream os;
            os << "conformal image crosses the singular locus near parameter " << lambda;
            throw kinematics_error(os.str());
        }
    }
    double step(double lambda) const override { return base->step(lambda); }
};

/// Presents an arbitrarily parameterized curve through its own proper time,
/// zeroed at the base parameter 0. Jets are transported by inverting the
/// local series of tau(lambda) and composing.
struct ProperTimeFacadeImpl final : Worldline::Impl {
    std::shared_ptr<const Worldline::Impl> base;
    explicit ProperTimeFacadeImpl(std::shared_ptr<const Worldline::Impl> b) : base(std::move(b)) {}

    std::array<Jet4, 4> jet(double tau) const override {
        const double lam = parameter_at_proper_time_impl(*base, tau);
        const auto x = base->jet(lam);
        const Jet4 s = speed_jet(x);
        // tau(lambda) - tau: integrate the speed series term by term.
        Jet4 t;
        t.c[0] = 0.0;
        for (std::size_t k = 1; k <= 4; ++k)
            t.c[k] = s.c[k - 1] / static_cast<double>(k);
        const Jet4 lam_of_tau = jet_invert(t);
        std::array<Jet4, 4> out;
        for (std::size_t mu = 0; mu < 4; ++mu)
            out[mu] = jet_compose(x[mu], lam_of_tau);
        return out;
    }
    std::array<double, 4> position(double tau) const override {
        return base->position(parameter_at_proper_time_impl(*base, tau));
    }
    double step(double tau) const override { return base->step(tau); }
};

ProperDerivatives proper_derivatives_from_jet(const std::array<Jet4, 4>& x) {
    std::array<Jet4, 4> xdot;
    for (std::size_t mu = 0; mu < 4; ++mu)
        xdot[mu] = jet_derivative(x[mu]);
    const Jet4 s2 = minkowski_square(xdot);
    if (!(s2.value() > 0.0))
        throw kinematics_error("worldline segment is spacelike or null");
    const Jet4 s = sqrt(s2);
    std::array<Jet4, 4> u, acc, jerk;
    for (std::size_t mu = 0; mu < 4; ++mu)
        u[mu] = xdot[mu] / s;
    for (std::size_t mu = 0; mu < 4; ++mu)
        acc[mu] = jet_derivative(u[mu]) / s;
    for (std::size_t mu = 0; mu < 4; ++mu)
        jerk[mu] = jet_derivative(acc[mu]) / s;
    ProperDerivatives out;
    for (int mu = 0; mu < 4; ++mu) {
        out.velocity[mu] = u[static_cast<std::size_t>(mu)].value();
        out.acceleration[mu] = acc[static_cast<std::size_t>(mu)].value();
        out.jerk[mu] = jerk[static_cast<std::size_t>(mu)].value();
        if (!std::isfinite(out.velocity[mu]) || !std::isfinite(out.acceleration[mu]) ||
            !std::isfinite(out.jerk[mu]))
            throw kinematics_error("worldline is not smooth enough for third derivatives");
    }
    return out;
}

} // namespace

Worldline::Worldline(std::shared_ptr<const Impl> impl, Parameterization p, DerivativeSource s)
    : impl_(std::move(impl)), param_(p), source_(s) {}

Worldline Worldline::analytic(JetFn position, Parameterization param) {
    return Worldline(std::make_shared<AnalyticImpl>(std::move(position)), param,
                     DerivativeSource::analytic);
}

Worldline Worldline::finite_difference(PointFn position, Parameterization param, double step) {
    return Worldline(std::make_shared<FiniteDifferenceImpl>(std::move(position), step), param,
                     DerivativeSource::finite_difference);
}

std::array<double, 4> Worldline::position(double lambda) const { return impl_->position(lambda); }

std::array<Jet4, 4> Worldline::jet(double lambda) const { return impl_->jet(lambda); }

double Worldline::step_at(double lambda) const { return impl_->step(lambda); }

double proper_time(const Worldline& w, double lambda0, double lambda1) {
    return proper_time_impl(*w.impl_, lambda0, lambda1);
}

double parameter_at_proper_time(const Worldline& w, double tau) {
    return parameter_at_proper_time_impl(*w.impl_, tau);
}

ProperDerivatives proper_derivatives(const Worldline& w, double lambda) {
    return proper_derivatives_from_jet(w.jet(lambda));
}

FourVector abraham_vector_at_parameter(const Worldline& w, double lambda) {
    const ProperDerivatives d = proper_derivatives(w, lambda);
    const double a2 = dot(d.acceleration, d.acceleration);
    FourVector gamma;
    for (int mu = 0; mu < 4; ++mu)
        gamma[mu] = d.jerk[mu] + a2 * d.velocity[mu];
    return gamma;
}

FourVector abraham_vector(const Worldline& w, double tau) {
    const double lambda = w.parameterization() == Parameterization::proper_time
                              ? tau
                              : parameter_at_proper_time(w, tau);
    return abraham_vector_at_parameter(w, lambda);
}

FourVector radiation_reaction(const Worldline& w, double tau, UnitSystem units) {
    const double c = light_speed(units);
    const double prefactor = hbar(units) / (6.0 * pi * c * c);
    FourVector f = abraham_vector(w, tau);
    for (int mu = 0; mu < 4; ++mu)
        f[mu] *= prefactor;
    return f;
}

FourVector radiation_reaction_at_parameter(const Worldline& w, double lambda, UnitSystem units) {
    const double c = light_speed(units);
    const double prefactor = hbar(units) / (6.0 * pi * c * c);
    FourVector f = abraham_vector_at_parameter(w, lambda);
    for (int mu = 0; mu < 4; ++mu)
        f[mu] *= prefactor;
    return f;
}

FourVector conformal_map(const FourVector& x, const FourVector& a) {
    const auto xu = x.raised(), au = a.raised();
    const auto out = conformal_map_point(
        xu.components, au.components,
        "conformal map denominator D(x) = 1 - 2 a.x + a^2 x^2 vanishes; point maps to infinity");
    return FourVector{out, IndexPosition::contravariant};
}

Worldline map_worldline(const Worldline& w, const FourVector& a) {
    auto image = std::make_shared<ConformalImageImpl>(w.impl_, a.raised().components);
    auto facade = std::make_shared<ProperTimeFacadeImpl>(std::move(image));
    return Worldline(std::move(facade), Parameterization::proper_time, w.derivative_source());
}

Worldline rest_worldline(const std::array<double, 3>& q) {
    return Worldline::analytic(
        [q](const Jet4& t) {
            return std::array<Jet4, 4>{t, Jet4(q[0]), Jet4(q[1]), Jet4(q[2])};
        },
        Parameterization::coordinate_time);
}

Worldline uniform_velocity_worldline(const std::array<double, 3>& v) {
    const double v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    if (!(v2 < 1.0))
        throw invalid_input("uniform velocity must satisfy |v| < 1 (units of c)");
    return Worldline::analytic(
        [v](const Jet4& t) {
            return std::array<Jet4, 4>{t, v[0] * t, v[1] * t, v[2] * t};
        },
        Parameterization::coordinate_time);
}

Worldline hyperbolic_worldline(double acceleration) {
    if (!(acceleration > 0.0))
        throw invalid_input("hyperbolic worldline requires a positive proper acceleration");
    const double a = acceleration;
    return Worldline::analytic(
        [a](const Jet4& tau) {
            return std::array<Jet4, 4>{sinh(a * tau) / a, cosh(a * tau) / a, Jet4(0.0),
                                       Jet4(0.0)};
        },
        Parameterization::proper_time);
}

Worldline sinusoid_worldline(double amplitude, double omega) {
    if (!(std::abs(amplitude * omega) < 1.0))
        throw invalid_input("sinusoid peak velocity |amplitude * omega| must stay below c");
    return Worldline::analytic(
        [amplitude, omega](const Jet4& t) {
            return std::array<Jet4, 4>{t, amplitude * sin(omega * t), Jet4(0.0), Jet4(0.0)};
        },
        Parameterization::coordinate_time);
}

} // namespace qvac::worldline
