#ifndef NCHYDRO_REGULARIZED_SERIES_HPP
#define NCHYDRO_REGULARIZED_SERIES_HPP

// eta-regularization of the two divergent sums behind S_1s(0), their
// integral closed forms, and the Richardson extrapolation eta -> 1.
//
// Both sums have terms ~ 16 sqrt(2/pi) Gamma(k+3/2)/k! * (...) eta^k which
// tend to a nonzero constant as k grows, so the un-damped series diverge;
// only their difference stays bounded as eta -> 1.

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace nchydro {

struct EtaSchedule {
    std::vector<double> values;   // strictly increasing, all in (0,1)
    int extrapolation_order = 0;  // 0 means "use all points"

    /// {0.90, 0.95, 0.98, 0.99, 0.995}, full order.
    static EtaSchedule default_schedule();
};

struct RegularizedSum {
    std::vector<double> etas;
    std::vector<double> per_eta;  // evaluator value at each eta
    double extrapolated = 0.0;
    double error_estimate = 0.0;
    bool stages_monotone = true;  // successive Richardson stages shrank

    nlohmann::json to_json() const;
};

/// 16 sqrt(2/pi) sum_{k<=k_max} Gamma(k+3/2)/k! 2F1(-k,1/2;3/2;2) eta^k.
/// Throws ConvergenceError ("truncation-not-converged") if the geometric
/// tail bound at k_max exceeds 1e-12 relative.
double sum_a_eta(double eta, int k_max);

/// 16 sqrt(2/pi) sum_{k<=k_max} Gamma(k+3/2)/k! sqrt(pi/(8k+6)) eta^k.
double sum_b_eta(double eta, int k_max);

/// sum_a - sum_b evaluated term-by-term (the combined terms alternate and
/// decay like 1/sqrt(k), so the partial sums are tail-averaged; the
/// separate sums would lose the cancellation to truncation near eta = 1).
double difference_series_eta(double eta, int k_max);

/// I2(eta) = int_{1/sqrt2}^1 dz (1 - eta(1-2z^2))^{-3/2}; finite on (0,1].
/// At eta = 1 the exact value sqrt(2)/8 is returned.
double i2_eta(double eta);

/// 8 sqrt(2) int_0^1 dz (1 - eta(1-2z^2))^{-3/2} as the I1+I2 split.
/// Throws DivergentAtUnityError at eta = 1 (I1 diverges there).
double closed_form_a(double eta);

/// 8 int_0^inf dz e^{-3z^2/4} (1 - eta e^{-z^2})^{-3/2}.
/// Throws DivergentAtUnityError at eta = 1.
double closed_form_b(double eta);

/// 8 sqrt(2) I2(eta) + 8 int_0^inf dt
///   [t e^{-t^2} - e^{-3t^2/4}(1-e^{-t^2})^{1/2}]
///   / [(1-e^{-t^2})^{1/2} (1-eta e^{-t^2})^{3/2}],
/// finite for all eta in (0,1]. Equals sum_a - sum_b for eta < 1 and
/// S_1s(0) at eta = 1.
double difference_closed_form(double eta);

/// Richardson elimination of the per-eta values in powers of (1-eta),
/// extrapolated to eta = 1. The error estimate is the largest distance
/// from the extrapolated value to the penultimate elimination stage.
/// Requires at least 3 schedule points.
RegularizedSum abel_extrapolate(const EtaSchedule& schedule,
                                const std::function<double(double)>& evaluator);

}  // namespace nchydro

#endif
