#include "nchydro/basis_expansion.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "nchydro/special_functions.hpp"

namespace nchydro {

namespace {

void require_k(int k) {
    if (k < 0 || k > 1000)
        throw std::invalid_argument("basis_expansion: k out of range [0, 10^3]");
}

}  // namespace

double coefficient_c(int k) {
    require_k(k);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * 2.0 * std::sqrt(gamma_ratio(k));
}

double overlap_i(int k) {
    require_k(k);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * std::sqrt(8.0 * gamma_ratio(k) / M_PI) * hyp2f1_neg(k);
}

double eigenvalue(int k) { return 2.0 * (2.0 * k + 1.5); }

ModeTable build_mode_table(int k_max) {
    require_k(k_max);
    ModeTable table;
    table.modes.reserve(k_max + 1);
    for (int k = 0; k <= k_max; ++k)
        table.modes.push_back({k, coefficient_c(k), overlap_i(k), eigenvalue(k)});
    return table;
}

void ModeTable::write_csv(std::ostream& os) const {
    os << "k,c_k,i_k,lambda_k\n";
    os.precision(17);
    for (const OscillatorMode& m : modes)
        os << m.k << ',' << m.c_k << ',' << m.i_k << ',' << m.lambda_k << '\n';
}

}  // namespace nchydro
