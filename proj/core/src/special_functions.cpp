#include "nchydro/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "nchydro/errors.hpp"
#include "nchydro/quadrature.hpp"

namespace nchydro {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

constexpr double kSqrtPi = 1.7724538509055160273;

}  // namespace

double laguerre(int degree, double order, double x) {
    require(degree >= 0, "laguerre: negative degree");
    require(degree <= 10'000, "laguerre: degree exceeds recurrence budget");
    require(std::isfinite(x), "laguerre: non-finite argument");
    require(x >= 0.0, "laguerre: negative argument");

    if (degree == 0) return 1.0;
    double prev = 1.0;                  // L_0
    double cur = 1.0 + order - x;       // L_1
    for (int m = 1; m < degree; ++m) {
        // (m+1) L_{m+1} = (2m+1+order-x) L_m - (m+order) L_{m-1}
        double next = ((2 * m + 1 + order - x) * cur - (m + order) * prev) / (m + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

double gamma_ratio(int k) {
    require(k >= 0 && k <= 10'000, "gamma_ratio: k out of range");
    double ratio = kSqrtPi / 2.0;  // Gamma(3/2)/0!
    for (int j = 0; j < k; ++j) ratio *= (j + 1.5) / (j + 1.0);
    return ratio;
}

double hyp2f1_neg_sum(int k) {
    require(k >= 0 && k <= 1000, "hyp2f1_neg_sum: k out of range");
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;

    cpp_int binom = 1;  // C(k,q)
    cpp_int pow2 = 1;   // 2^q
    cpp_rational acc = 0;
    for (int q = 0; q <= k; ++q) {
        cpp_rational term(binom * pow2, 2 * q + 1);
        if (q % 2 != 0)
            acc -= term;
        else
            acc += term;
        binom = binom * (k - q) / (q + 1);
        pow2 <<= 1;
    }
    return acc.convert_to<double>();
}

double hyp2f1_neg_integral(int k) {
    require(k >= 0 && k <= 1000, "hyp2f1_neg_integral: k out of range");
    auto f = [k](double z) {
        double base = 1.0 - 2.0 * z * z;
        return std::pow(base, k);
    };
    return integrate_finite(f, 0.0, 1.0, 1e-13).value;
}

double hyp2f1_neg(int k) {
    require(k >= 0 && k <= 1000, "hyp2f1_neg: k out of range");
    if (k <= 30) return hyp2f1_neg_sum(k);
    return hyp2f1_neg_integral(k);
}

double hydrogen_radial(int n, double x) {
    require(n >= 1 && n <= 20, "hydrogen_radial: n out of range");
    require(std::isfinite(x) && x >= 0.0, "hydrogen_radial: bad argument");
    double nf = n;
    return std::sqrt(4.0 / std::pow(nf, 5)) * std::exp(-x / nf) *
           laguerre(n - 1, 1.0, 2.0 * x / nf);
}

double oscillator_radial(int k, double x) {
    require(k >= 0 && k <= 1000, "oscillator_radial: k out of range");
    require(std::isfinite(x) && x >= 0.0, "oscillator_radial: bad argument");
    // sqrt(2 k!/Gamma(k+3/2)) in log space
    double log_pref = 0.5 * (std::log(2.0) + std::lgamma(k + 1.0) - std::lgamma(k + 1.5));
    return std::exp(log_pref - 0.5 * x * x) * laguerre(k, 0.5, x * x);
}

}  // namespace nchydro
