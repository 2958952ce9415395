#pragma once

#include <functional>

namespace qvac::detail {

/// Adaptive Gauss-Kronrod integral of f over [a, b] (GSL QAG, 61-point rule).
/// Exceptions thrown by f propagate out.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double epsrel = 1e-11, double epsabs = 0.0);

/// Cauchy principal value of  int_a^b f(x)/(x - pole) dx  with pole strictly
/// inside (a, b) (GSL QAWC).
double integrate_cauchy_pv(const std::function<double(double)>& f, double a, double b,
                           double pole, double epsrel = 1e-10, double epsabs = 0.0);

} // namespace qvac::detail
