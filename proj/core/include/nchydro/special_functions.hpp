#ifndef NCHYDRO_SPECIAL_FUNCTIONS_HPP
#define NCHYDRO_SPECIAL_FUNCTIONS_HPP

// Closed-form special functions shared by the whole library: generalized
// Laguerre polynomials, the overflow-safe Gamma ratio Gamma(k+3/2)/k!,
// the terminating hypergeometric 2F1(-k,1/2;3/2;2), and the hydrogen /
// radial-oscillator wavefunctions.
//
// All functions are pure and safe for concurrent invocation.

namespace nchydro {

/// Generalized Laguerre polynomial L^order_degree(x) by the stable forward
/// three-term recurrence. Exact for degree 0 and 1.
/// Throws std::invalid_argument for negative degree, degree > 10^4,
/// non-finite x, or x < 0.
double laguerre(int degree, double order, double x);

/// Gamma(k+3/2)/k!, computed by the ratio recurrence
/// ratio_{k+1} = ratio_k * (k+3/2)/(k+1) so no intermediate overflows.
/// Requires 0 <= k <= 10^4.
double gamma_ratio(int k);

/// 2F1(-k,1/2;3/2;2): finite alternating sum for k <= 30, integral
/// representation \int_0^1 (1-2z^2)^k dz beyond. Requires 0 <= k <= 10^3.
double hyp2f1_neg(int k);

/// The finite sum sum_{q=0}^k (-1)^q C(k,q) 2^q/(2q+1), evaluated in exact
/// rational arithmetic (the alternating terms cancel by ~2^k, which no
/// floating summation order survives past k ~ 20). Exact up to the final
/// rounding to double.
double hyp2f1_neg_sum(int k);

/// 2F1(-k,1/2;3/2;2) via adaptive quadrature of \int_0^1 (1-2z^2)^k dz.
double hyp2f1_neg_integral(int k);

/// Dimensionless hydrogen ns radial wavefunction
/// sqrt(4/n^5) e^{-x/n} L^1_{n-1}(2x/n). Requires 1 <= n <= 20, x >= 0.
double hydrogen_radial(int n, double x);

/// Radial oscillator eigenfunction
/// sqrt(2 k!/Gamma(k+3/2)) e^{-x^2/2} L^{1/2}_k(x^2),
/// normalization computed in log space. Requires 0 <= k <= 100, x >= 0.
double oscillator_radial(int k, double x);

}  // namespace nchydro

#endif
