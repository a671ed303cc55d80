#ifndef NCHYDRO_QUADRATURE_HPP
#define NCHYDRO_QUADRATURE_HPP

#include <functional>
#include <optional>

namespace nchydro {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
};

/// Replacement rule for integrands with a removable 0/0 form at small
/// argument: below `threshold` the integrator calls `eval` instead of the
/// raw integrand.
struct SmallArgSeries {
    double threshold = 0.0;
    std::function<double(double)> eval;
};

/// Adaptive integration of f on [a,b] to absolute tolerance `tol`.
///
/// Globally adaptive bisection driven by a 15-point Kronrod rule with the
/// embedded 7-point Gauss rule for the error estimate. Subintervals are
/// refined worst-first; the final value and error are accumulated in
/// position order, so identical inputs give bit-identical results.
///
/// Throws ConvergenceError ("max-subdivision-exceeded") if the tolerance is
/// not reached within `max_intervals` subintervals.
QuadratureResult integrate_finite(const std::function<double(double)>& f,
                                  double a, double b, double tol,
                                  int max_intervals = 4000);

/// Adaptive integration of f on [0, inf) to absolute tolerance `tol`.
///
/// Maps t = u/(1-u) onto u in [0,1) and integrates adaptively. The
/// integrand must decay at least as fast as a Gaussian tail; a probe at
/// t in {15, 25, 40} throws ConvergenceError ("tail-not-decaying") if |f|
/// there exceeds 1e-10. When `small_t` is given, f is replaced by the
/// series rule below its threshold.
QuadratureResult integrate_semi_infinite(
    const std::function<double(double)>& f, double tol,
    const std::optional<SmallArgSeries>& small_t = std::nullopt,
    int max_intervals = 4000);

}  // namespace nchydro

#endif
