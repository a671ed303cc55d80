#ifndef NCHYDRO_CORRECTIONS_HPP
#define NCHYDRO_CORRECTIONS_HPP

#include <cstdint>
#include <vector>

#include "nchydro/monte_carlo.hpp"

namespace nchydro {

/// How to compute the central constant S_1s(0).
enum class S1sMethod {
    Integral,    // 2 + 8 int_0^inf ... (default, ~1e-10 quadrature)
    AbelSeries,  // Richardson-extrapolated eta-damped series (~1e-3)
};

/// Noncommutativity parameters. chi and the theta expectation are derived;
/// the lengths are configuration with CODATA defaults, not hard-coded
/// truths.
struct NcParameters {
    double alpha = 1.0;            // dimensionless noncommutativity constant
    double planck_length = kPlanckLengthM;
    double bohr_radius = kBohrRadiusM;

    static constexpr double kPlanckLengthM = 1.616255e-35;
    static constexpr double kBohrRadiusM = 5.29177e-11;

    /// chi = sqrt(alpha/2) l_p / a_B.
    double chi() const;
    /// chi^2 = alpha l_p^2 / (2 a_B^2), formed without the square root.
    double chi_squared() const;
    /// hbar <theta> = alpha l_p^2 (m^2); <theta> itself carries 1/hbar.
    double hbar_theta_mean() const;

    /// CODATA lengths with the given alpha.
    static NcParameters with_alpha(double alpha);
    /// CODATA lengths with alpha chosen so chi() equals the given value
    /// (test convenience; physical chi is ~1e-25).
    static NcParameters with_chi(double chi);

    /// Throws InvalidParametersError unless alpha and both lengths are
    /// positive and finite.
    void validate() const;
};

struct EnergyCorrection {
    int n = 0;
    double delta_e = 0.0;         // in units of e^2/a_B
    double ratio_to_level = 0.0;  // delta_e / |E_n|, |E_n| = 1/(2n^2)
};

/// S_1s(0) ~ 1.72006, computed once per process per method and cached.
double s1s_zero(S1sMethod method = S1sMethod::Integral);

/// S_ns(0) = n^2 S_1s(0). Requires 1 <= n <= 20.
double sns_zero(int n);

/// I_ns(0, theta') = (pi theta' / (4 n^5)) S_ns(0). Requires 1 <= n <= 20.
double i_ns_zero(int n, double theta_prime);

/// <theta'> = <|a' x b'|> over the oscillator ground states; equals 1.
McEstimate theta_prime_mean(long long samples, std::uint64_t seed);

/// Leading-order correction Delta E_ns = S_1s(0) pi chi^2 / (4 n^3) in
/// units of e^2/a_B. Requires 1 <= n <= 20 and valid parameters.
EnergyCorrection delta_e_ns(const NcParameters& params, int n);

/// The same correction assembled from hbar<theta>:
/// S_1s(0) pi hbar<theta> / (8 a_B^2 n^3). Identical to delta_e_ns up to
/// rounding since chi^2 = alpha l_p^2/(2 a_B^2).
double delta_e_ns_theta_form(const NcParameters& params, int n);

/// Rows n = 1..n_max.
std::vector<EnergyCorrection> correction_table(const NcParameters& params,
                                               int n_max);

}  // namespace nchydro

#endif
