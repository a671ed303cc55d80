#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

std::string temp_path(const std::string& stem) {
    const char* dir = std::getenv("TMPDIR");
    return std::string(dir ? dir : "/tmp") + "/" + stem;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string out_path = temp_path("nchydro_cli_out.txt");
    const std::string cmd = env_prefix + std::string(NCHYDRO_CLI_PATH) + " " +
                            args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.output = read_file(out_path);
    std::remove(out_path.c_str());
    return r;
}

double parse_after(const std::string& text, const std::string& marker) {
    const auto pos = text.find(marker);
    REQUIRE(pos != std::string::npos);
    return std::stod(text.substr(pos + marker.size()));
}

}  // namespace

TEST_CASE("s1s integral route prints the constant") {
    const auto r = run_cli("s1s --method integral --precision 12");
    CHECK(r.exit_code == 0);
    const double value = parse_after(r.output, "integral route:");
    CHECK(value == doctest::Approx(1.7200674582).epsilon(1e-9));
}

TEST_CASE("s1s both routes agree within the default tolerance") {
    const auto r = run_cli("s1s --method both --precision 12");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("route discrepancy:") != std::string::npos);
    const double d = parse_after(r.output, "route discrepancy:");
    CHECK(d <= 2e-3);
}

TEST_CASE("s1s both with an impossible tolerance exits 1") {
    const auto r = run_cli("s1s --method both --tolerance 1e-12");
    CHECK(r.exit_code == 1);
}

TEST_CASE("correction at chi = 1 reproduces pi S / 4") {
    const auto r = run_cli("correction --chi 1 --n 1 --format csv --precision 12");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.output);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header == "n,delta_e_hartree,ratio_to_level");
    CHECK(row.rfind("1,", 0) == 0);
    const double delta_e = std::stod(row.substr(2));
    CHECK(delta_e == doctest::Approx(1.350937).epsilon(1e-6));
}

TEST_CASE("table csv has the header and n_max rows") {
    const auto r = run_cli("table --chi 1 --n-max 5 --format csv");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.output);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,delta_e_hartree,ratio_to_level");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 5);
}

TEST_CASE("table json parses and shows the n^-3 law") {
    const auto r = run_cli("table --chi 1 --n-max 4 --format json --precision 15");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("chi").get<double>() == doctest::Approx(1.0));
    CHECK(j.at("s1s").get<double>() == doctest::Approx(1.72006746).epsilon(1e-8));
    const auto& rows = j.at("rows");
    REQUIRE(rows.size() == 4);
    const double e1 = rows[0].at("delta_e_hartree").get<double>();
    const double e2 = rows[1].at("delta_e_hartree").get<double>();
    CHECK(e2 / e1 == doctest::Approx(0.125).epsilon(1e-10));
}

TEST_CASE("table --output writes the file") {
    const std::string path = temp_path("nchydro_cli_table.csv");
    const auto r = run_cli("table --chi 1 --n-max 3 --format csv --output " + path);
    CHECK(r.exit_code == 0);
    const std::string contents = read_file(path);
    std::remove(path.c_str());
    CHECK(contents.rfind("n,delta_e_hartree,ratio_to_level", 0) == 0);
}

TEST_CASE("repeated runs are byte-identical") {
    const auto a = run_cli("table --alpha 2.5 --n-max 6 --format csv --precision 17");
    const auto b = run_cli("table --alpha 2.5 --n-max 6 --format csv --precision 17");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("theta is reproducible under a fixed seed") {
    const auto a = run_cli("theta --samples 200000 --seed 99 --precision 17");
    const auto b = run_cli("theta --samples 200000 --seed 99 --precision 17");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    const double mean = parse_after(a.output, "theta_prime_mean =");
    CHECK(mean == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("invalid arguments exit 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("correction --n 0").exit_code == 2);
    CHECK(run_cli("correction --n 21").exit_code == 2);
    CHECK(run_cli("table --format yaml").exit_code == 2);
    CHECK(run_cli("correction --alpha -3").exit_code == 2);
}

TEST_CASE("verify --dump-modes writes k_max + 1 rows") {
    const std::string path = temp_path("nchydro_cli_modes.csv");
    const auto r = run_cli("verify --samples 100000 --kmax 10 --dump-modes " + path);
    CHECK(r.exit_code == 0);
    std::istringstream in(read_file(path));
    std::remove(path.c_str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "k,c_k,i_k,lambda_k");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 11);
}

TEST_CASE("verify passes and lists each check") {
    const auto r = run_cli("verify --samples 1000000 --seed 4242");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("s1s-integral-route") != std::string::npos);
    CHECK(r.output.find("mc-theta-prime-mean") != std::string::npos);
}

TEST_CASE("constants file overrides the defaults") {
    const std::string path = temp_path("nchydro_cli_constants.txt");
    {
        std::ofstream out(path);
        out << "# test overrides\n";
        out << "planck_length=1.0\n";
        out << "bohr_radius=1.0\n";
        out << "hartree_ev=2.0\n";
    }
    // l_p = a_B makes chi = sqrt(alpha/2); alpha = 2 gives chi = 1
    const auto r = run_cli("correction --alpha 2 --n 1 --format csv --precision 12",
                           "NCHYDRO_CONSTANTS=" + path + " ");
    std::remove(path.c_str());
    CHECK(r.exit_code == 0);
    std::istringstream in(r.output);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    const double delta_e = std::stod(row.substr(2));
    CHECK(delta_e == doctest::Approx(1.350937).epsilon(1e-6));
}
