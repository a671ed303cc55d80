#include "nchydro/regularized_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "nchydro/errors.hpp"
#include "nchydro/quadrature.hpp"
#include "nchydro/special_functions.hpp"

namespace nchydro {

namespace {

constexpr int kSeriesCap = 1000;
const double kPrefactor = 16.0 * std::sqrt(2.0 / M_PI);
const double kSqrt2 = std::sqrt(2.0);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Per-k data reused across eta values and sums.
struct TermTable {
    std::vector<double> gamma_ratio;  // Gamma(k+3/2)/k!
    std::vector<double> hyp2f1;       // 2F1(-k,1/2;3/2;2)
};

const TermTable& term_table(int k_max) {
    static TermTable table;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    for (int k = static_cast<int>(table.gamma_ratio.size()); k <= k_max; ++k) {
        table.gamma_ratio.push_back(gamma_ratio(k));
        table.hyp2f1.push_back(hyp2f1_neg(k));
    }
    return table;
}

void check_eta_open(double eta) {
    if (!(eta > 0.0 && eta < 1.0))
        throw std::invalid_argument("eta must lie in (0,1)");
}

void check_k_max(int k_max) {
    if (k_max < 0 || k_max > kSeriesCap)
        throw std::invalid_argument("k_max out of range [0, 10^3]");
}

void check_truncation(double last_term, double eta, double sum) {
    const double tail_bound = std::abs(last_term) * eta / (1.0 - eta);
    if (tail_bound > 1e-12 * std::max(1.0, std::abs(sum)))
        throw ConvergenceError("eta sum: truncation-not-converged");
}

double kahan_sum(int k_max, double eta,
                 const std::function<double(int)>& coefficient, double* last_term) {
    double sum = 0.0, comp = 0.0, eta_k = 1.0, term = 0.0;
    for (int k = 0; k <= k_max; ++k) {
        term = coefficient(k) * eta_k;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        eta_k *= eta;
    }
    if (last_term) *last_term = term;
    return sum;
}

// Taylor series of n(t) = t e^{-t^2} - e^{-3t^2/4} sqrt(1-e^{-t^2}) about
// t = 0 through t^21; absolute error < 3e-18 for t <= 0.35. The direct
// expression loses all digits below t ~ 0.1 (n ~ -t^5/48 against O(t)
// terms).
double numerator_series(double t) {
    const double t2 = t * t;
    double p = -1.0 / 48.0;
    p += t2 * (1.0 / 48.0);
    double t4 = t2 * t2;
    p += t4 * (-241.0 / 23040.0);
    p += t4 * t2 * (9.0 / 2560.0);
    double t8 = t4 * t4;
    p += t8 * (-6893.0 / 7741440.0);
    p += t8 * t2 * (281.0 / 1548288.0);
    p += t8 * t4 * (-230813.0 / 7431782400.0);
    p += t8 * t4 * t2 * (34141.0 / 7431782400.0);
    p += t8 * t8 * (-112031.0 / 186856243200.0);
    return p * t4 * t;  // * t^5
}

double numerator(double t) {
    if (t < 0.35) return numerator_series(t);
    const double e = std::exp(-t * t);
    return t * e - std::exp(-0.75 * t * t) * std::sqrt(1.0 - e);
}

}  // namespace

EtaSchedule EtaSchedule::default_schedule() {
    return {{0.90, 0.95, 0.98, 0.99, 0.995}, 0};
}

double sum_a_eta(double eta, int k_max) {
    check_eta_open(eta);
    check_k_max(k_max);
    const TermTable& table = term_table(k_max);
    double last = 0.0;
    const double sum =
        kPrefactor * kahan_sum(
                         k_max, eta,
                         [&](int k) { return table.gamma_ratio[k] * table.hyp2f1[k]; },
                         &last);
    check_truncation(kPrefactor * last, eta, sum);
    return sum;
}

double sum_b_eta(double eta, int k_max) {
    check_eta_open(eta);
    check_k_max(k_max);
    const TermTable& table = term_table(k_max);
    double last = 0.0;
    const double sum = kPrefactor *
                       kahan_sum(
                           k_max, eta,
                           [&](int k) {
                               return table.gamma_ratio[k] *
                                      std::sqrt(M_PI / (8.0 * k + 6.0));
                           },
                           &last);
    check_truncation(kPrefactor * last, eta, sum);
    return sum;
}

double difference_series_eta(double eta, int k_max) {
    check_eta_open(eta);
    check_k_max(k_max);
    const TermTable& table = term_table(k_max);
    // Combined terms alternate and decay ~ 1/sqrt(k); averaging the last
    // two partial sums halves the oscillating tail, which the separate
    // (divergence-dominated) sums cannot resolve near eta = 1.
    double sum = 0.0, comp = 0.0, prev = 0.0, eta_k = 1.0;
    for (int k = 0; k <= k_max; ++k) {
        const double coeff =
            table.gamma_ratio[k] *
            (table.hyp2f1[k] - std::sqrt(M_PI / (8.0 * k + 6.0)));
        prev = sum;
        const double y = kPrefactor * coeff * eta_k - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        eta_k *= eta;
    }
    return 0.5 * (sum + prev);
}

double i2_eta(double eta) {
    if (!(eta > 0.0 && eta <= 1.0))
        throw std::invalid_argument("i2_eta: eta must lie in (0,1]");
    if (eta == 1.0) return kSqrt2 / 8.0;  // exact
    auto f = [eta](double z) {
        return std::pow(1.0 - eta * (1.0 - 2.0 * z * z), -1.5);
    };
    return integrate_finite(f, kInvSqrt2, 1.0, 1e-13).value;
}

double closed_form_a(double eta) {
    if (eta == 1.0)
        throw DivergentAtUnityError("closed_form_a: I1 diverges at eta = 1");
    check_eta_open(eta);
    auto f = [eta](double z) {
        return std::pow(1.0 - eta * (1.0 - 2.0 * z * z), -1.5);
    };
    const double i1 = integrate_finite(f, 0.0, kInvSqrt2, 1e-13).value;
    return 8.0 * kSqrt2 * (i1 + i2_eta(eta));
}

double closed_form_b(double eta) {
    if (eta == 1.0)
        throw DivergentAtUnityError("closed_form_b: integrand singular at eta = 1");
    check_eta_open(eta);
    auto f = [eta](double z) {
        const double e = std::exp(-z * z);
        return std::exp(-0.75 * z * z) * std::pow(1.0 - eta * e, -1.5);
    };
    return 8.0 * integrate_semi_infinite(f, 1e-12).value;
}

double difference_closed_form(double eta) {
    if (!(eta > 0.0 && eta <= 1.0))
        throw std::invalid_argument("difference_closed_form: eta must lie in (0,1]");
    auto f = [eta](double t) {
        const double one_minus_e = -std::expm1(-t * t);
        const double denom =
            std::sqrt(one_minus_e) *
            std::pow(1.0 - eta * std::exp(-t * t), 1.5);
        return numerator(t) / denom;
    };
    // At eta = 1 the integrand tends to 0 like -t/48; below t = 1e-4 the
    // denominator itself underflows, so substitute the full series there.
    SmallArgSeries series{
        1e-4, [eta](double t) {
            if (eta == 1.0) return -t / 48.0 + 13.0 * t * t * t * t * t / 7680.0;
            const double one_minus_e = -std::expm1(-t * t);
            const double denom = std::sqrt(one_minus_e) *
                                 std::pow(1.0 - eta * std::exp(-t * t), 1.5);
            return numerator_series(t) / denom;
        }};
    const double integral = integrate_semi_infinite(f, 1e-12, series).value;
    return 8.0 * kSqrt2 * i2_eta(eta) + 8.0 * integral;
}

RegularizedSum abel_extrapolate(const EtaSchedule& schedule,
                                const std::function<double(double)>& evaluator) {
    const auto& etas = schedule.values;
    if (etas.size() < 3)
        throw std::invalid_argument("abel_extrapolate: need at least 3 eta points");
    for (std::size_t i = 0; i < etas.size(); ++i) {
        if (!(etas[i] > 0.0 && etas[i] < 1.0))
            throw std::invalid_argument("abel_extrapolate: eta values must lie in (0,1)");
        if (i > 0 && !(etas[i] > etas[i - 1]))
            throw std::invalid_argument("abel_extrapolate: eta values must increase");
    }

    RegularizedSum result;
    result.etas = etas;
    result.per_eta.reserve(etas.size());
    for (double eta : etas) result.per_eta.push_back(evaluator(eta));

    // Neville elimination in x = 1 - eta toward x = 0.
    const int n = static_cast<int>(etas.size());
    int stages = n - 1;
    if (schedule.extrapolation_order > 0)
        stages = std::min(stages, schedule.extrapolation_order);

    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = 1.0 - etas[i];
    std::vector<std::vector<double>> tableau{result.per_eta};
    for (int j = 1; j <= stages; ++j) {
        const auto& prev = tableau.back();
        std::vector<double> row(n - j);
        for (int i = 0; i < n - j; ++i)
            row[i] = (x[i] * prev[i + 1] - x[i + j] * prev[i]) / (x[i] - x[i + j]);
        tableau.push_back(std::move(row));
    }

    result.extrapolated = tableau.back().front();
    if (tableau.size() >= 2) {
        double err = 0.0;
        for (double v : tableau[tableau.size() - 2])
            err = std::max(err, std::abs(result.extrapolated - v));
        result.error_estimate = err;
    }
    // Successive diagonal corrections should shrink.
    double prev_step = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j < tableau.size(); ++j) {
        const double step = std::abs(tableau[j].front() - tableau[j - 1].front());
        if (step > prev_step && step > 1e-14) result.stages_monotone = false;
        prev_step = step;
    }
    return result;
}

nlohmann::json RegularizedSum::to_json() const {
    nlohmann::json j;
    j["eta"] = etas;
    j["partial_sums"] = per_eta;
    j["extrapolated"] = extrapolated;
    j["error_estimate"] = error_estimate;
    j["stages_monotone"] = stages_monotone;
    return j;
}

}  // namespace nchydro
