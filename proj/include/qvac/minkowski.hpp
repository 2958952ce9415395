#pragma once

#include <array>
#include <cstddef>

namespace qvac {

// Metric signature diag(+,-,-,-) throughout.

/// eta_{mu mu} diagonal element.
constexpr double metric_diag(int mu) { return mu == 0 ? 1.0 : -1.0; }

/// eta_{mu nu}.
constexpr double metric(int mu, int nu) { return mu == nu ? metric_diag(mu) : 0.0; }

/// Minkowski inner product of two contravariant four-component objects.
template <typename T>
T minkowski_dot(const std::array<T, 4>& a, const std::array<T, 4>& b) {
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

/// Minkowski square a.a.
template <typename T>
T minkowski_square(const std::array<T, 4>& a) {
    return minkowski_dot(a, a);
}

} // namespace qvac
