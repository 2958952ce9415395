#include "quadrature.hpp"

#include "qvac/errors.hpp"

#include <cmath>
#include <exception>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>
#include <limits>
#include <memory>
#include <string>

namespace qvac::detail {

namespace {

const bool gsl_handler_disabled = [] {
    gsl_set_error_handler_off();
    return true;
}();

struct Trampoline {
    const std::function<double(double)>* fn;
    std::exception_ptr pending;
};

double call(double x, void* params) {
    auto* t = static_cast<Trampoline*>(params);
    if (t->pending)
        return std::numeric_limits<double>::quiet_NaN();
    try {
        return (*t->fn)(x);
    } catch (...) {
        t->pending = std::current_exception();
        return std::numeric_limits<double>::quiet_NaN();
    }
}

using Workspace = std::unique_ptr<gsl_integration_workspace,
                                  decltype(&gsl_integration_workspace_free)>;

Workspace make_workspace(std::size_t n) {
    return Workspace(gsl_integration_workspace_alloc(n), &gsl_integration_workspace_free);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double epsrel, double epsabs) {
    (void)gsl_handler_disabled;
    if (a == b)
        return 0.0;
    Trampoline tramp{&f, nullptr};
    gsl_function gf{&call, &tramp};
    auto ws = make_workspace(4000);
    double result = 0.0, abserr = 0.0;
    const int status = gsl_integration_qag(&gf, a, b, epsabs, epsrel, 4000,
                                           GSL_INTEG_GAUSS61, ws.get(), &result, &abserr);
    if (tramp.pending)
        std::rethrow_exception(tramp.pending);
    if (status != GSL_SUCCESS && status != GSL_EROUND)
        throw error(std::string("adaptive quadrature failed: ") + gsl_strerror(status));
    return result;
}

double integrate_cauchy_pv(const std::function<double(double)>& f, double a, double b,
                           double pole, double epsrel, double epsabs) {
    (void)gsl_handler_disabled;
    Trampoline tramp{&f, nullptr};
    gsl_function gf{&call, &tramp};
    auto ws = make_workspace(4000);
    double result = 0.0, abserr = 0.0;
    const int status = gsl_integration_qawc(&gf, a, b, pole, epsabs, epsrel, 4000,
                                            ws.get(), &result, &abserr);
    if (tramp.pending)
        std::rethrow_exception(tramp.pending);
    if (status != GSL_SUCCESS && status != GSL_EROUND)
        throw error(std::string("principal-value quadrature failed: ") + gsl_strerror(status));
    return result;
}

} // namespace qvac::detail
