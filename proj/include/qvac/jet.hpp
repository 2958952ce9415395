#pragma once

#include "qvac/errors.hpp"

#include <array>
#include <cmath>
#include <cstddef>

namespace qvac {

/// Truncated Taylor series (value plus ORDER derivative coefficients) used to
/// propagate exact derivatives through worldline kinematics. Coefficients are
/// stored as Taylor coefficients c_k = f^(k)/k!, so products are Cauchy
/// products truncated at ORDER.
template <std::size_t ORDER>
struct Jet {
    std::array<double, ORDER + 1> c{};

    Jet() = default;
    Jet(double value) { c[0] = value; }

    /// Independent variable seed: value v, unit first derivative.
    static Jet variable(double v) {
        Jet j;
        j.c[0] = v;
        if constexpr (ORDER >= 1)
            j.c[1] = 1.0;
        return j;
    }

    double value() const { return c[0]; }
    /// k-th derivative f^(k) = k! c_k.
    double derivative(std::size_t k) const {
        double fact = 1.0;
        for (std::size_t i = 2; i <= k; ++i)
            fact *= static_cast<double>(i);
        return c[k] * fact;
    }

    Jet operator-() const {
        Jet r;
        for (std::size_t k = 0; k <= ORDER; ++k)
            r.c[k] = -c[k];
        return r;
    }

    friend Jet operator+(const Jet& a, const Jet& b) {
        Jet r;
        for (std::size_t k = 0; k <= ORDER; ++k)
            r.c[k] = a.c[k] + b.c[k];
        return r;
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        Jet r;
        for (std::size_t k = 0; k <= ORDER; ++k)
            r.c[k] = a.c[k] - b.c[k];
        return r;
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r;
        for (std::size_t k = 0; k <= ORDER; ++k) {
            double s = 0.0;
            for (std::size_t j = 0; j <= k; ++j)
                s += a.c[j] * b.c[k - j];
            r.c[k] = s;
        }
        return r;
    }
    friend Jet operator/(const Jet& a, const Jet& b) {
        if (b.c[0] == 0.0)
            throw kinematics_error("jet division by a series with zero leading coefficient");
        Jet r;
        for (std::size_t k = 0; k <= ORDER; ++k) {
            double s = a.c[k];
            for (std::size_t j = 1; j <= k; ++j)
                s -= b.c[j] * r.c[k - j];
            r.c[k] = s / b.c[0];
        }
        return r;
    }

    friend Jet operator+(const Jet& a, double b) { return a + Jet(b); }
    friend Jet operator+(double a, const Jet& b) { return Jet(a) + b; }
    friend Jet operator-(const Jet& a, double b) { return a - Jet(b); }
    friend Jet operator-(double a, const Jet& b) { return Jet(a) - b; }
    friend Jet operator*(const Jet& a, double b) {
        Jet r;
        for (std::size_t k = 0; k <= ORDER; ++k)
            r.c[k] = a.c[k] * b;
        return r;
    }
    friend Jet operator*(double a, const Jet& b) { return b * a; }
    friend Jet operator/(const Jet& a, double b) { return a * (1.0 / b); }
    friend Jet operator/(double a, const Jet& b) { return Jet(a) / b; }
};

/// Series of f' from the series of f: one order is consumed; the top
/// coefficient of the result is left at zero.
template <std::size_t ORDER>
Jet<ORDER> jet_derivative(const Jet<ORDER>& f) {
    Jet<ORDER> r;
    for (std::size_t k = 0; k + 1 <= ORDER; ++k)
        r.c[k] = f.c[k + 1] * static_cast<double>(k + 1);
    return r;
}

namespace detail {

/// Composes an analytic function given by its local Taylor coefficients
/// head[k] = f^(k)(g0)/k! with a jet g (expanded around g0 = g.c[0]).
template <std::size_t ORDER>
Jet<ORDER> compose_series(const std::array<double, ORDER + 1>& head, const Jet<ORDER>& g) {
    Jet<ORDER> dg = g;
    dg.c[0] = 0.0;
    Jet<ORDER> r(head[ORDER]);
    for (std::size_t k = ORDER; k-- > 0;)
        r = r * dg + Jet<ORDER>(head[k]);
    return r;
}

} // namespace detail

template <std::size_t ORDER>
Jet<ORDER> sqrt(const Jet<ORDER>& a) {
    if (!(a.c[0] > 0.0))
        throw kinematics_error("jet sqrt requires a positive leading coefficient");
    const double s0 = std::sqrt(a.c[0]);
    Jet<ORDER> r;
    r.c[0] = s0;
    for (std::size_t k = 1; k <= ORDER; ++k) {
        double s = a.c[k];
        for (std::size_t j = 1; j < k; ++j)
            s -= r.c[j] * r.c[k - j];
        r.c[k] = s / (2.0 * s0);
    }
    return r;
}

template <std::size_t ORDER>
Jet<ORDER> exp(const Jet<ORDER>& g) {
    std::array<double, ORDER + 1> head{};
    double fact = 1.0;
    const double e0 = std::exp(g.c[0]);
    for (std::size_t k = 0; k <= ORDER; ++k) {
        if (k > 0)
            fact *= static_cast<double>(k);
        head[k] = e0 / fact;
    }
    return detail::compose_series<ORDER>(head, g);
}

template <std::size_t ORDER>
Jet<ORDER> sin(const Jet<ORDER>& g) {
    std::array<double, ORDER + 1> head{};
    const double s = std::sin(g.c[0]), c = std::cos(g.c[0]);
    const std::array<double, 4> cyc{s, c, -s, -c};
    double fact = 1.0;
    for (std::size_t k = 0; k <= ORDER; ++k) {
        if (k > 0)
            fact *= static_cast<double>(k);
        head[k] = cyc[k % 4] / fact;
    }
    return detail::compose_series<ORDER>(head, g);
}

template <std::size_t ORDER>
Jet<ORDER> cos(const Jet<ORDER>& g) {
    std::array<double, ORDER + 1> head{};
    const double s = std::sin(g.c[0]), c = std::cos(g.c[0]);
    const std::array<double, 4> cyc{c, -s, -c, s};
    double fact = 1.0;
    for (std::size_t k = 0; k <= ORDER; ++k) {
        if (k > 0)
            fact *= static_cast<double>(k);
        head[k] = cyc[k % 4] / fact;
    }
    return detail::compose_series<ORDER>(head, g);
}

template <std::size_t ORDER>
Jet<ORDER> sinh(const Jet<ORDER>& g) {
    std::array<double, ORDER + 1> head{};
    const double sh = std::sinh(g.c[0]), ch = std::cosh(g.c[0]);
    double fact = 1.0;
    for (std::size_t k = 0; k <= ORDER; ++k) {
        if (k > 0)
            fact *= static_cast<double>(k);
        head[k] = (k % 2 == 0 ? sh : ch) / fact;
    }
    return detail::compose_series<ORDER>(head, g);
}

template <std::size_t ORDER>
Jet<ORDER> cosh(const Jet<ORDER>& g) {
    std::array<double, ORDER + 1> head{};
    const double sh = std::sinh(g.c[0]), ch = std::cosh(g.c[0]);
    double fact = 1.0;
    for (std::size_t k = 0; k <= ORDER; ++k) {
        if (k > 0)
            fact *= static_cast<double>(k);
        head[k] = (k % 2 == 0 ? ch : sh) / fact;
    }
    return detail::compose_series<ORDER>(head, g);
}

/// Composes jet f (series in u around u0 = g.c[0]... i.e. f.c are Taylor
/// coefficients of F at u0) with jet g of u(t): returns the series of F(u(t))
/// in t. g.c[0] must equal the expansion point implicitly; only the
/// higher-order part of g enters.
template <std::size_t ORDER>
Jet<ORDER> jet_compose(const Jet<ORDER>& f, const Jet<ORDER>& g) {
    return detail::compose_series<ORDER>(f.c, g);
}

/// Inverts a series t(u) with t.c[0] = 0 and t.c[1] != 0, returning the
/// series of u(t) with u.c[0] = 0. Solved order by order through composition.
template <std::size_t ORDER>
Jet<ORDER> jet_invert(const Jet<ORDER>& t) {
    if (t.c[0] != 0.0)
        throw invalid_input("series inversion requires a zero constant term");
    if (t.c[1] == 0.0)
        throw kinematics_error("series inversion requires a nonzero linear term");
    Jet<ORDER> u;
    u.c[1] = 1.0 / t.c[1];
    for (std::size_t k = 2; k <= ORDER; ++k) {
        const Jet<ORDER> r = jet_compose(t, u); // want r = identity
        u.c[k] -= r.c[k] / t.c[1];
    }
    return u;
}

using Jet4 = Jet<4>;

} // namespace qvac
