#ifndef NCHYDRO_VERIFICATION_HPP
#define NCHYDRO_VERIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace nchydro {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;  // the deviation/statistic that was bounded
    double bound = 0.0;
    std::string detail;
};

struct VerifyOptions {
    long long mc_samples = 10'000'000;
    std::uint64_t mc_seed = 20230517;
    int series_k_max = 400;
};

/// The full deterministic identity battery: generating function, 2F1 dual
/// route, basis orthonormality, eigenvalue residual, eta-consistency of
/// sums vs closed forms, I2(1), Monte Carlo <theta'>, S_1s(0) values and
/// route agreement, n^-3 scaling, and the chi-form/theta-form identity.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

/// True iff every check passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace nchydro

#endif
