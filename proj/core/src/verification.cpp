#include "nchydro/verification.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "nchydro/basis_expansion.hpp"
#include "nchydro/corrections.hpp"
#include "nchydro/monte_carlo.hpp"
#include "nchydro/quadrature.hpp"
#include "nchydro/regularized_series.hpp"
#include "nchydro/special_functions.hpp"

namespace nchydro {

namespace {

CheckResult make_check(std::string name, double measured, double bound,
                       std::string detail = {}) {
    CheckResult r;
    r.name = std::move(name);
    r.measured = measured;
    r.bound = bound;
    r.pass = measured <= bound;
    r.detail = std::move(detail);
    return r;
}

double generating_function_deviation(double t) {
    // sum Gamma(k+3/2)/k! t^k = sqrt(pi)/(2 (1-t)^{3/2}), truncated once the
    // geometric tail bound drops below 1e-12.
    double sum = 0.0, comp = 0.0, t_k = 1.0;
    for (int k = 0; k <= 1000; ++k) {
        const double g = gamma_ratio(k);
        const double y = g * t_k - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        t_k *= t;
        if (g * t_k / (1.0 - t) < 1e-12) break;
    }
    const double closed = std::sqrt(M_PI) / (2.0 * std::pow(1.0 - t, 1.5));
    return std::abs(sum - closed);
}

double eigenvalue_residual(int k) {
    // p_r^2 phi = -(1/r) d^2/dr^2 (r phi), second-order central differences
    // on a uniform grid.
    const double h = 1e-3;
    const double r0 = 1e-3, r1 = 12.0;
    const int n = static_cast<int>((r1 - r0) / h) + 1;
    std::vector<double> r(n), u(n), phi(n);
    for (int i = 0; i < n; ++i) {
        r[i] = r0 + i * h;
        phi[i] = oscillator_radial(k, r[i]);
        u[i] = r[i] * phi[i];
    }
    const double lambda = eigenvalue(k);
    double res2 = 0.0, norm2 = 0.0;
    for (int i = 1; i + 1 < n; ++i) {
        const double upp = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / (h * h);
        const double applied = r[i] * r[i] * phi[i] - upp / r[i];
        const double res = applied - lambda * phi[i];
        res2 += res * res;
        norm2 += phi[i] * phi[i];
    }
    return std::sqrt(res2 / norm2);
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    std::vector<CheckResult> checks;
    const double kReferenceS1s = 1.72006;

    const double s_int = s1s_zero(S1sMethod::Integral);
    checks.push_back(make_check("s1s-integral-route",
                                std::abs(s_int - kReferenceS1s), 1e-5));

    const double s_abel = s1s_zero(S1sMethod::AbelSeries);
    checks.push_back(make_check("s1s-abel-series-route",
                                std::abs(s_abel - kReferenceS1s), 1e-3));

    checks.push_back(
        make_check("s1s-route-agreement", std::abs(s_int - s_abel), 2e-3));

    {
        auto f = [](double z) {
            return std::pow(1.0 - (1.0 - 2.0 * z * z), -1.5);
        };
        const double i2 = integrate_finite(f, 1.0 / std::sqrt(2.0), 1.0, 1e-12).value;
        checks.push_back(make_check("i2-at-unity",
                                    std::abs(i2 - std::sqrt(2.0) / 8.0), 1e-10));
    }

    checks.push_back(make_check(
        "eta-consistency-a-0.5",
        std::abs(sum_a_eta(0.5, 200) - closed_form_a(0.5)), 1e-9));
    checks.push_back(make_check(
        "eta-consistency-a-0.9",
        std::abs(sum_a_eta(0.9, opts.series_k_max) - closed_form_a(0.9)), 1e-7));
    checks.push_back(make_check(
        "eta-consistency-b-0.5",
        std::abs(sum_b_eta(0.5, 200) - closed_form_b(0.5)), 1e-9));
    checks.push_back(make_check(
        "eta-consistency-b-0.9",
        std::abs(sum_b_eta(0.9, opts.series_k_max) - closed_form_b(0.9)), 1e-7));
    checks.push_back(make_check(
        "eta-consistency-difference-0.5",
        std::abs(difference_series_eta(0.5, 200) - difference_closed_form(0.5)),
        1e-8));
    checks.push_back(make_check(
        "eta-consistency-difference-0.9",
        std::abs(difference_series_eta(0.9, opts.series_k_max) -
                 difference_closed_form(0.9)),
        1e-6));

    {
        double worst = 0.0;
        for (double t : {0.1, 0.5, 0.9})
            worst = std::max(worst, generating_function_deviation(t));
        checks.push_back(make_check("generating-function-identity", worst, 1e-10));
    }

    {
        double worst = 0.0;
        for (int k = 0; k <= 40; ++k)
            worst = std::max(worst,
                             std::abs(hyp2f1_neg_sum(k) - hyp2f1_neg_integral(k)));
        checks.push_back(make_check("hyp2f1-dual-route", worst, 1e-9));
    }

    {
        double worst = 0.0;
        for (int j = 0; j <= 12; ++j) {
            for (int k = j; k <= 12; ++k) {
                auto f = [j, k](double r) {
                    return r * r * oscillator_radial(j, r) * oscillator_radial(k, r);
                };
                const double g = integrate_finite(f, 0.0, 12.0, 1e-12).value;
                const double expect = (j == k) ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(g - expect));
            }
        }
        checks.push_back(make_check("basis-orthonormality", worst, 1e-10));
    }

    {
        double worst = 0.0;
        for (int k = 0; k <= 5; ++k)
            worst = std::max(worst, eigenvalue_residual(k));
        checks.push_back(make_check("eigenvalue-residual", worst, 1e-4));
    }

    {
        const McEstimate est = theta_prime_mean(opts.mc_samples, opts.mc_seed);
        std::ostringstream detail;
        detail << "mean=" << est.mean << " std_error=" << est.std_error
               << " samples=" << est.samples << " seed=" << est.seed;
        checks.push_back(make_check("mc-theta-prime-mean",
                                    std::abs(est.mean - 1.0),
                                    3.0 * est.std_error, detail.str()));
    }

    {
        const NcParameters params = NcParameters::with_chi(1.0);
        const double base = delta_e_ns(params, 1).delta_e;
        double worst = 0.0;
        for (int n = 1; n <= 10; ++n) {
            const double scaled =
                delta_e_ns(params, n).delta_e * n * n * n;
            worst = std::max(worst, std::abs(scaled - base) / base);
        }
        checks.push_back(make_check("n-cubed-scaling", worst, 1e-12));
    }

    {
        SplitMix64 rng(915u);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            NcParameters p;
            p.alpha = std::exp(8.0 * (rng.next_uniform() - 0.5));
            p.planck_length = std::exp(8.0 * (rng.next_uniform() - 0.5)) * 1e-35;
            p.bohr_radius = std::exp(8.0 * (rng.next_uniform() - 0.5)) * 1e-11;
            const int n = 1 + static_cast<int>(rng.next_uniform() * 20.0);
            const double chi_form = delta_e_ns(p, n).delta_e;
            const double theta_form = delta_e_ns_theta_form(p, n);
            worst = std::max(worst, std::abs(chi_form - theta_form) / chi_form);
        }
        checks.push_back(make_check("unit-form-identity", worst, 1e-14));
    }

    return checks;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace nchydro
