#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "nchydro/errors.hpp"
#include "nchydro/regularized_series.hpp"

#include <nlohmann/json.hpp>

using namespace nchydro;

namespace {
// frozen from a 50-digit independent evaluation of
// 2 + 8 int_0^inf [t e^{-t^2} - e^{-3t^2/4} sqrt(1-e^{-t^2})]/(1-e^{-t^2})^2 dt
constexpr double kS1sReference = 1.7200674581768376;
}

TEST_CASE("sum_a at eta -> 0 is the k = 0 term, 8 sqrt(2)") {
    CHECK(sum_a_eta(1e-13, 50) == doctest::Approx(8.0 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("sum_b at eta -> 0 is the k = 0 term, 8 sqrt(pi/3)") {
    CHECK(sum_b_eta(1e-13, 50) ==
          doctest::Approx(8.0 * std::sqrt(M_PI / 3.0)).epsilon(1e-12));
}

TEST_CASE("series sums match their closed forms") {
    CHECK(std::abs(sum_a_eta(0.5, 200) - closed_form_a(0.5)) <= 1e-9);
    CHECK(std::abs(sum_a_eta(0.9, 400) - closed_form_a(0.9)) <= 1e-7);
    CHECK(std::abs(sum_b_eta(0.5, 200) - closed_form_b(0.5)) <= 1e-9);
    CHECK(std::abs(sum_b_eta(0.9, 400) - closed_form_b(0.9)) <= 1e-7);
}

TEST_CASE("difference of the sums equals the combined closed form") {
    CHECK(std::abs(difference_series_eta(0.5, 200) - difference_closed_form(0.5)) <=
          1e-8);
    CHECK(std::abs(difference_series_eta(0.9, 400) - difference_closed_form(0.9)) <=
          1e-6);
    // consistency across the eta range
    for (double eta : {0.2, 0.4, 0.6, 0.8}) {
        CHECK(std::abs(sum_a_eta(eta, 300) - sum_b_eta(eta, 300) -
                       difference_closed_form(eta)) <= 1e-7);
    }
}

TEST_CASE("I2 at unity is sqrt(2)/8 exactly") {
    CHECK(i2_eta(1.0) == std::sqrt(2.0) / 8.0);
}

TEST_CASE("difference closed form at unity reproduces the reference constant") {
    CHECK(difference_closed_form(1.0) ==
          doctest::Approx(kS1sReference).epsilon(1e-9));
}

TEST_CASE("divergence at unity is reported") {
    CHECK_THROWS_AS(closed_form_a(1.0), DivergentAtUnityError);
    CHECK_THROWS_AS(closed_form_b(1.0), DivergentAtUnityError);
}

TEST_CASE("truncation that cannot converge is reported") {
    CHECK_THROWS_AS(sum_a_eta(0.995, 100), ConvergenceError);
    CHECK_THROWS_AS(sum_b_eta(0.995, 100), ConvergenceError);
}

TEST_CASE("closed_form_b grows without bound toward unity, difference stays flat") {
    CHECK(closed_form_b(0.995) > closed_form_b(0.98));
    CHECK(std::abs(difference_closed_form(0.995)) < 3.0);
    CHECK(std::abs(difference_closed_form(0.98)) < 3.0);
}

TEST_CASE("abel extrapolation of a constant is exact") {
    const auto r = abel_extrapolate(EtaSchedule::default_schedule(),
                                    [](double) { return 4.25; });
    CHECK(r.extrapolated == doctest::Approx(4.25).epsilon(1e-14));
    CHECK(r.stages_monotone);
}

TEST_CASE("abel extrapolation of 1 - eta vanishes") {
    const auto r = abel_extrapolate(EtaSchedule::default_schedule(),
                                    [](double eta) { return 1.0 - eta; });
    CHECK(std::abs(r.extrapolated) <= 1e-12);
}

TEST_CASE("abel extrapolation of the difference series hits the constant") {
    const auto r =
        abel_extrapolate(EtaSchedule::default_schedule(),
                         [](double eta) { return difference_series_eta(eta, 400); });
    CHECK(std::abs(r.extrapolated - kS1sReference) <= 1e-3);
    CHECK(r.error_estimate > 0.0);
    CHECK(std::abs(r.extrapolated - kS1sReference) <= 2.0 * r.error_estimate);
}

TEST_CASE("schedule validation") {
    CHECK_THROWS_AS(abel_extrapolate({{0.9, 0.95}, 0}, [](double) { return 0.0; }),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        abel_extrapolate({{0.9, 0.8, 0.95}, 0}, [](double) { return 0.0; }),
        std::invalid_argument);
    CHECK_THROWS_AS(
        abel_extrapolate({{0.9, 0.95, 1.0}, 0}, [](double) { return 0.0; }),
        std::invalid_argument);
}

TEST_CASE("json serialization carries the schedule and result") {
    const auto r = abel_extrapolate(EtaSchedule::default_schedule(),
                                    [](double eta) { return 2.0 - eta; });
    const nlohmann::json j = r.to_json();
    CHECK(j.at("eta").size() == 5);
    CHECK(j.at("partial_sums").size() == 5);
    CHECK(j.at("extrapolated").get<double>() == doctest::Approx(1.0));
    CHECK(j.contains("error_estimate"));
}
