#ifndef NCHYDRO_BASIS_EXPANSION_HPP
#define NCHYDRO_BASIS_EXPANSION_HPP

#include <iosfwd>
#include <vector>

namespace nchydro {

/// Spectral data of the radial operator r^2 + p_r^2 for one mode k:
/// the expansion coefficient of the constant function, the overlap with r,
/// and the eigenvalue. Signs are stored explicitly so consumers cannot
/// desynchronize sign conventions.
struct OscillatorMode {
    int k = 0;
    double c_k = 0.0;       // (-1)^k sqrt(4 Gamma(k+3/2)/k!)
    double i_k = 0.0;       // (-1)^k sqrt(8 Gamma(k+3/2)/(pi k!)) 2F1(-k,1/2;3/2;2)
    double lambda_k = 0.0;  // 2(2k+3/2)
};

struct ModeTable {
    std::vector<OscillatorMode> modes;  // contiguous in k from 0

    /// CSV with header "k,c_k,i_k,lambda_k", full double precision.
    void write_csv(std::ostream& os) const;
};

/// (-1)^k sqrt(4 Gamma(k+3/2)/k!). Requires 0 <= k <= 10^3.
double coefficient_c(int k);

/// (-1)^k sqrt(8 Gamma(k+3/2)/(pi k!)) 2F1(-k,1/2;3/2;2).
/// Requires 0 <= k <= 10^3.
double overlap_i(int k);

/// Eigenvalue 2(2k+3/2) of r^2 + p_r^2.
double eigenvalue(int k);

/// All modes k = 0..k_max. Requires 0 <= k_max <= 10^3.
ModeTable build_mode_table(int k_max);

}  // namespace nchydro

#endif
