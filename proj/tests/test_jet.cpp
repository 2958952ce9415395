#include "qvac/jet.hpp"

#include <cmath>
#include <doctest.h>

using qvac::Jet4;

TEST_CASE("jet arithmetic reproduces closed-form derivatives") {
    const double t0 = 0.7;
    const Jet4 t = Jet4::variable(t0);

    SUBCASE("product rule") {
        // f = t^2 sin(t): f''' = -t^2 cos - 6 t sin + 6 cos ... check numerically
        const Jet4 f = t * t * sin(t);
        const double s = std::sin(t0), c = std::cos(t0);
        CHECK(f.derivative(0) == doctest::Approx(t0 * t0 * s).epsilon(1e-14));
        CHECK(f.derivative(1) == doctest::Approx(2 * t0 * s + t0 * t0 * c).epsilon(1e-14));
        CHECK(f.derivative(2) == doctest::Approx(2 * s + 4 * t0 * c - t0 * t0 * s).epsilon(1e-14));
        CHECK(f.derivative(3) == doctest::Approx(6 * c - 6 * t0 * s - t0 * t0 * c).epsilon(1e-13));
    }

    SUBCASE("quotient and sqrt") {
        const Jet4 g = sqrt(1.0 + t * t) / (2.0 + cos(t));
        // spot check first derivative against a central difference
        const double h = 1e-6;
        auto plain = [](double x) { return std::sqrt(1 + x * x) / (2 + std::cos(x)); };
        const double fd = (plain(t0 + h) - plain(t0 - h)) / (2 * h);
        CHECK(g.derivative(1) == doctest::Approx(fd).epsilon(1e-8));
    }

    SUBCASE("hyperbolic functions") {
        const Jet4 f = sinh(2.0 * t);
        CHECK(f.derivative(3) == doctest::Approx(8.0 * std::cosh(2 * t0)).epsilon(1e-13));
        const Jet4 g = exp(t) - cosh(t) - sinh(t);
        for (std::size_t k = 0; k <= 4; ++k)
            CHECK(std::abs(g.c[k]) < 1e-14);
    }
}

TEST_CASE("jet_derivative shifts coefficients") {
    const Jet4 t = Jet4::variable(0.3);
    const Jet4 f = cos(t);
    const Jet4 df = qvac::jet_derivative(f);
    CHECK(df.value() == doctest::Approx(-std::sin(0.3)).epsilon(1e-15));
    CHECK(df.derivative(2) == doctest::Approx(std::sin(0.3)).epsilon(1e-13));
}

TEST_CASE("series inversion composes to the identity") {
    // t(u) = sinh(u) around 0, as a relative series with zero constant term
    Jet4 t;
    t.c = {0.0, 1.0, 0.0, 1.0 / 6.0, 0.0};
    const Jet4 u = qvac::jet_invert(t);
    const Jet4 round_trip = qvac::jet_compose(t, u);
    CHECK(round_trip.c[0] == doctest::Approx(0.0));
    CHECK(round_trip.c[1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(round_trip.c[2]) < 1e-15);
    CHECK(std::abs(round_trip.c[3]) < 1e-15);
    CHECK(std::abs(round_trip.c[4]) < 1e-15);
    // asinh(x) = x - x^3/6 + ...
    CHECK(u.c[3] == doctest::Approx(-1.0 / 6.0).epsilon(1e-14));
}
