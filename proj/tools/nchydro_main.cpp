// Command-line front end: computation (s1s, correction, table, theta) and
// verification (verify) with text/csv/json output.
//
// Exit codes: 0 success, 1 a requested check or tolerance failed,
// 2 invalid arguments.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nchydro/basis_expansion.hpp"
#include "nchydro/corrections.hpp"
#include "nchydro/errors.hpp"
#include "nchydro/regularized_series.hpp"
#include "nchydro/verification.hpp"

namespace {

using nchydro::EnergyCorrection;
using nchydro::NcParameters;
using nchydro::S1sMethod;

constexpr double kDefaultHartreeEv = 27.211386;

struct Constants {
    double planck_length = NcParameters::kPlanckLengthM;
    double bohr_radius = NcParameters::kBohrRadiusM;
    double hartree_ev = kDefaultHartreeEv;
};

// Optional key=value override file named by NCHYDRO_CONSTANTS.
Constants load_constants() {
    Constants c;
    const char* path = std::getenv("NCHYDRO_CONSTANTS");
    if (path == nullptr) return c;
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error(std::string("cannot open constants file: ") + path);
    }
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos || line.empty() || line[0] == '#') continue;
        const std::string key = line.substr(0, eq);
        const double value = std::stod(line.substr(eq + 1));
        if (key == "planck_length")
            c.planck_length = value;
        else if (key == "bohr_radius")
            c.bohr_radius = value;
        else if (key == "hartree_ev")
            c.hartree_ev = value;
    }
    return c;
}

NcParameters resolve_params(const Constants& c, std::optional<double> alpha,
                            std::optional<double> chi) {
    NcParameters p;
    p.planck_length = c.planck_length;
    p.bohr_radius = c.bohr_radius;
    if (chi) {
        p.alpha = 2.0 * (*chi) * (*chi) * (p.bohr_radius / p.planck_length) *
                  (p.bohr_radius / p.planck_length);
    } else {
        p.alpha = alpha.value_or(1.0);
    }
    p.validate();
    return p;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

void print_table(std::ostream& os, const std::vector<EnergyCorrection>& rows,
                 const NcParameters& params, const std::string& format,
                 int precision) {
    os << std::setprecision(precision);
    if (format == "csv") {
        os << "n,delta_e_hartree,ratio_to_level\n";
        for (const auto& r : rows)
            os << r.n << ',' << r.delta_e << ',' << r.ratio_to_level << '\n';
    } else if (format == "json") {
        nlohmann::json j;
        j["alpha"] = params.alpha;
        j["chi"] = params.chi();
        j["s1s"] = nchydro::s1s_zero(S1sMethod::Integral);
        j["rows"] = nlohmann::json::array();
        for (const auto& r : rows)
            j["rows"].push_back({{"n", r.n},
                                 {"delta_e_hartree", r.delta_e},
                                 {"ratio_to_level", r.ratio_to_level}});
        os << j.dump(2) << '\n';
    } else {
        os << "# alpha=" << params.alpha << " chi=" << params.chi() << '\n';
        os << "n  delta_e [e^2/a_B]  delta_e/|E_n|\n";
        for (const auto& r : rows)
            os << r.n << "  " << r.delta_e << "  " << r.ratio_to_level << '\n';
    }
}

int run(int argc, char** argv) {
    CLI::App app{"hydrogen ns-level corrections in rotationally invariant "
                 "noncommutative space"};
    app.require_subcommand(1);
    app.fallthrough();
    int precision = 6;
    app.add_option("--precision", precision, "significant digits in output")
        ->check(CLI::Range(1, 17));

    // ---- s1s ----
    auto* s1s = app.add_subcommand("s1s", "compute the constant S_1s(0)");
    std::string method = "integral";
    s1s->add_option("--method", method, "integral | abel | both")
        ->check(CLI::IsMember({"integral", "abel", "both"}));
    std::vector<double> eta_values;
    s1s->add_option("--eta", eta_values, "eta schedule for the abel route")
        ->delimiter(',');
    int k_max = 400;
    s1s->add_option("--kmax", k_max, "series depth for the abel route")
        ->check(CLI::Range(3, 1000));
    double s1s_tolerance = 2e-3;
    s1s->add_option("--tolerance", s1s_tolerance,
                    "allowed discrepancy for --method both")
        ->check(CLI::PositiveNumber);

    // ---- correction ----
    auto* correction = app.add_subcommand(
        "correction", "energy correction Delta E_ns for one level");
    std::optional<double> alpha_opt, chi_opt;
    int level_n = 1;
    std::string corr_format = "text";
    bool to_ev = false;
    correction->add_option("--alpha", alpha_opt, "noncommutativity constant");
    correction->add_option("--chi", chi_opt, "set chi directly (testing)");
    correction->add_option("--n", level_n, "principal quantum number")
        ->check(CLI::Range(1, 20));
    correction->add_option("--format", corr_format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    correction->add_flag("--ev", to_ev, "also print the correction in eV");

    // ---- table ----
    auto* table = app.add_subcommand("table", "corrections for n = 1..n_max");
    std::optional<double> table_alpha, table_chi;
    int n_max = 5;
    std::string table_format = "text";
    std::string output_path;
    table->add_option("--alpha", table_alpha, "noncommutativity constant");
    table->add_option("--chi", table_chi, "set chi directly (testing)");
    table->add_option("--n-max", n_max, "largest level")->check(CLI::Range(1, 20));
    table->add_option("--format", table_format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    table->add_option("--output", output_path, "write to file instead of stdout");

    // ---- theta ----
    auto* theta = app.add_subcommand(
        "theta", "Monte Carlo estimate of <theta'> = <|a' x b'|>");
    long long theta_samples = 1'000'000;
    std::uint64_t theta_seed = 20230517;
    theta->add_option("--samples", theta_samples)->check(CLI::Range(1000LL, 1'000'000'000LL));
    theta->add_option("--seed", theta_seed);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run the identity battery");
    long long verify_samples = 10'000'000;
    std::uint64_t verify_seed = 20230517;
    std::string dump_modes_path;
    int dump_k_max = 400;
    verify->add_option("--samples", verify_samples)
        ->check(CLI::Range(1000LL, 1'000'000'000LL));
    verify->add_option("--seed", verify_seed);
    verify->add_option("--dump-modes", dump_modes_path,
                       "write the mode table (k, c_k, i_k, lambda_k) as CSV");
    verify->add_option("--kmax", dump_k_max, "mode table depth")
        ->check(CLI::Range(0, 1000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const Constants constants = load_constants();
    std::cout << std::setprecision(precision);

    if (s1s->parsed()) {
        int status = 0;
        double value_integral = 0.0, value_abel = 0.0;
        if (method == "integral" || method == "both") {
            value_integral = nchydro::s1s_zero(S1sMethod::Integral);
            std::cout << "S_1s(0) integral route: " << value_integral << '\n';
        }
        if (method == "abel" || method == "both") {
            nchydro::EtaSchedule schedule = nchydro::EtaSchedule::default_schedule();
            if (!eta_values.empty()) schedule.values = eta_values;
            const nchydro::RegularizedSum sum = nchydro::abel_extrapolate(
                schedule, [k_max](double eta) {
                    return nchydro::difference_series_eta(eta, k_max);
                });
            value_abel = sum.extrapolated;
            std::cout << "S_1s(0) abel-series route: " << value_abel
                      << " (error estimate " << sum.error_estimate << ")\n";
            for (std::size_t i = 0; i < sum.etas.size(); ++i)
                std::cout << "  eta=" << sum.etas[i] << "  sum=" << sum.per_eta[i]
                          << '\n';
        }
        if (method == "both") {
            const double discrepancy = std::abs(value_integral - value_abel);
            std::cout << "route discrepancy: " << discrepancy << '\n';
            if (discrepancy > s1s_tolerance) status = 1;
        }
        return status;
    }

    if (correction->parsed()) {
        const NcParameters params = resolve_params(constants, alpha_opt, chi_opt);
        const EnergyCorrection row = nchydro::delta_e_ns(params, level_n);
        std::vector<EnergyCorrection> rows{row};
        print_table(std::cout, rows, params, corr_format, precision);
        if (to_ev)
            std::cout << "delta_e = " << row.delta_e * constants.hartree_ev
                      << " eV\n";
        return 0;
    }

    if (table->parsed()) {
        const NcParameters params =
            resolve_params(constants, table_alpha, table_chi);
        const auto rows = nchydro::correction_table(params, n_max);
        std::ofstream file;
        std::ostream& os = open_output(file, output_path);
        print_table(os, rows, params, table_format, precision);
        return 0;
    }

    if (theta->parsed()) {
        const nchydro::McEstimate est =
            nchydro::theta_prime_mean(theta_samples, theta_seed);
        std::cout << "theta_prime_mean = " << est.mean << " +- " << est.std_error
                  << "  (samples=" << est.samples << " seed=" << est.seed << ")\n";
        return 0;
    }

    // verify
    if (!dump_modes_path.empty()) {
        std::ofstream out(dump_modes_path);
        if (!out) {
            std::cerr << "cannot open " << dump_modes_path << '\n';
            return 2;
        }
        nchydro::build_mode_table(dump_k_max).write_csv(out);
        std::cout << "mode table written to " << dump_modes_path << '\n';
    }
    nchydro::VerifyOptions opts;
    opts.mc_samples = verify_samples;
    opts.mc_seed = verify_seed;
    const auto checks = nchydro::run_verification(opts);
    for (const auto& c : checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name
                  << "  (deviation " << c.measured << ", bound " << c.bound << ')';
        if (!c.detail.empty()) std::cout << "  [" << c.detail << ']';
        std::cout << '\n';
    }
    return nchydro::all_passed(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const nchydro::InvalidParametersError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
