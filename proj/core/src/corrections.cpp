#include "nchydro/corrections.hpp"

#include <cmath>
#include <stdexcept>

#include "nchydro/errors.hpp"
#include "nchydro/quadrature.hpp"
#include "nchydro/regularized_series.hpp"

namespace nchydro {

namespace {

void check_n(int n) {
    if (n < 1 || n > 20)
        throw InvalidParametersError(
            "principal quantum number out of range [1, 20]");
}

double s1s_integral_route() {
    // S_1s(0) = 2 + 8 int_0^inf dt
    //   [t e^{-t^2} - e^{-3t^2/4} sqrt(1-e^{-t^2})] / (1-e^{-t^2})^2
    // The integrand is a 0/0 form at t = 0 with limit slope -1/48.
    auto f = [](double t) {
        const double one_minus_e = -std::expm1(-t * t);
        const double e = std::exp(-t * t);
        double num;
        if (t < 0.35) {
            // shared-numerator Taylor series, see regularized_series
            const double t2 = t * t;
            const double t4 = t2 * t2;
            const double t8 = t4 * t4;
            double p = -1.0 / 48.0 + t2 * (1.0 / 48.0) + t4 * (-241.0 / 23040.0) +
                       t4 * t2 * (9.0 / 2560.0) + t8 * (-6893.0 / 7741440.0) +
                       t8 * t2 * (281.0 / 1548288.0) +
                       t8 * t4 * (-230813.0 / 7431782400.0) +
                       t8 * t4 * t2 * (34141.0 / 7431782400.0) +
                       t8 * t8 * (-112031.0 / 186856243200.0);
            num = p * t4 * t;
        } else {
            num = t * e - std::exp(-0.75 * t * t) * std::sqrt(one_minus_e);
        }
        return num / (one_minus_e * one_minus_e);
    };
    SmallArgSeries series{1e-4, [](double t) {
                              return -t / 48.0 + 13.0 * std::pow(t, 5) / 7680.0;
                          }};
    return 2.0 + 8.0 * integrate_semi_infinite(f, 1e-11, series).value;
}

double s1s_abel_route() {
    const EtaSchedule schedule = EtaSchedule::default_schedule();
    const RegularizedSum sum = abel_extrapolate(
        schedule, [](double eta) { return difference_series_eta(eta, 400); });
    return sum.extrapolated;
}

}  // namespace

double NcParameters::chi() const {
    return std::sqrt(alpha / 2.0) * planck_length / bohr_radius;
}

double NcParameters::chi_squared() const {
    return alpha * planck_length * planck_length /
           (2.0 * bohr_radius * bohr_radius);
}

double NcParameters::hbar_theta_mean() const {
    return alpha * planck_length * planck_length;
}

NcParameters NcParameters::with_alpha(double alpha) {
    NcParameters p;
    p.alpha = alpha;
    p.validate();
    return p;
}

NcParameters NcParameters::with_chi(double chi) {
    NcParameters p;
    p.alpha = 2.0 * chi * chi * (p.bohr_radius / p.planck_length) *
              (p.bohr_radius / p.planck_length);
    p.validate();
    return p;
}

void NcParameters::validate() const {
    const bool ok = std::isfinite(alpha) && alpha > 0.0 &&
                    std::isfinite(planck_length) && planck_length > 0.0 &&
                    std::isfinite(bohr_radius) && bohr_radius > 0.0;
    if (!ok)
        throw InvalidParametersError(
            "NcParameters: alpha and lengths must be positive and finite");
}

double s1s_zero(S1sMethod method) {
    if (method == S1sMethod::Integral) {
        static const double value = s1s_integral_route();
        return value;
    }
    static const double value = s1s_abel_route();
    return value;
}

double sns_zero(int n) {
    check_n(n);
    return static_cast<double>(n) * n * s1s_zero(S1sMethod::Integral);
}

double i_ns_zero(int n, double theta_prime) {
    check_n(n);
    if (!(theta_prime >= 0.0))
        throw std::invalid_argument("i_ns_zero: theta_prime must be >= 0");
    const double n5 = std::pow(static_cast<double>(n), 5);
    return M_PI * theta_prime / (4.0 * n5) * sns_zero(n);
}

McEstimate theta_prime_mean(long long samples, std::uint64_t seed) {
    return mc_gaussian_expectation(
        [](const Vec3& a, const Vec3& b) { return a.cross(b).norm(); }, samples,
        seed);
}

EnergyCorrection delta_e_ns(const NcParameters& params, int n) {
    check_n(n);
    params.validate();
    const double n3 = static_cast<double>(n) * n * n;
    const double chi = params.chi();
    const double delta = s1s_zero(S1sMethod::Integral) * M_PI * chi * chi / (4.0 * n3);
    // |E_n| = 1/(2n^2) in units of e^2/a_B
    const double ratio = delta * 2.0 * n * n;
    return EnergyCorrection{n, delta, ratio};
}

double delta_e_ns_theta_form(const NcParameters& params, int n) {
    check_n(n);
    params.validate();
    const double n3 = static_cast<double>(n) * n * n;
    const double a_b = params.bohr_radius;
    return s1s_zero(S1sMethod::Integral) * M_PI * params.hbar_theta_mean() /
           (8.0 * a_b * a_b * n3);
}

std::vector<EnergyCorrection> correction_table(const NcParameters& params,
                                               int n_max) {
    check_n(n_max);
    std::vector<EnergyCorrection> rows;
    rows.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) rows.push_back(delta_e_ns(params, n));
    return rows;
}

}  // namespace nchydro
