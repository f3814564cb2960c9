#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "reference_values.hpp"
#include "tauclock/params.hpp"

namespace ref = tauclock_test_ref;

namespace {

double rel_err(double actual, double expected) {
    return std::abs(actual / expected - 1.0);
}

}  // namespace

TEST_CASE("standard parameters match the reference models") {
    const auto csl = tauclock::standard_params(tauclock::ModelKind::Csl);
    CHECK(csl.kind == tauclock::ModelKind::Csl);
    CHECK(csl.lambda_per_s == 1e-16);
    CHECK(csl.sigma_m == 1e-7);

    const auto dp = tauclock::standard_params(tauclock::ModelKind::Dp);
    CHECK(dp.kind == tauclock::ModelKind::Dp);
    CHECK(dp.sigma_m == 1e-9);
}

TEST_CASE("gamma follows lambda (4 pi sigma^2)^(3/2)") {
    const auto csl = tauclock::standard_params(tauclock::ModelKind::Csl);
    CHECK(rel_err(csl.gamma_m3_per_s(), ref::kGammaCslRef) < 1e-13);
}

TEST_CASE("gamma and lambda conversions are inverse to each other") {
    for (const double lambda : {1e-20, 1e-16, 1e-11, 3.7e-14}) {
        for (const double sigma : {1e-9, 1e-7, 2.5e-6}) {
            const double gamma = tauclock::gamma_from_lambda(lambda, sigma);
            CHECK(rel_err(tauclock::lambda_from_gamma(gamma, sigma), lambda) < 1e-13);
        }
    }
}

TEST_CASE("alpha is the inverse squared smearing length") {
    const auto dp = tauclock::ModelParams::dp(2e-9);
    CHECK(rel_err(dp.alpha_per_m2(), 1.0 / (2e-9 * 2e-9)) < 1e-15);
}

TEST_CASE("model kind names round trip") {
    CHECK(tauclock::model_kind_from_string("csl") == tauclock::ModelKind::Csl);
    CHECK(tauclock::model_kind_from_string("CSL") == tauclock::ModelKind::Csl);
    CHECK(tauclock::model_kind_from_string("dp") == tauclock::ModelKind::Dp);
    CHECK(tauclock::model_kind_from_string("DP") == tauclock::ModelKind::Dp);
    CHECK(tauclock::to_string(tauclock::ModelKind::Csl) == std::string("csl"));
    CHECK(tauclock::to_string(tauclock::ModelKind::Dp) == std::string("dp"));
    CHECK_THROWS_AS((void)tauclock::model_kind_from_string("grw"), std::invalid_argument);
}

TEST_CASE("constructors reject non-physical parameters") {
    CHECK_THROWS_AS((void)tauclock::ModelParams::csl(0.0, 1e-7), std::invalid_argument);
    CHECK_THROWS_AS((void)tauclock::ModelParams::csl(-1e-16, 1e-7), std::invalid_argument);
    CHECK_THROWS_AS((void)tauclock::ModelParams::csl(1e-16, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)tauclock::ModelParams::dp(-1e-9), std::invalid_argument);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS((void)tauclock::ModelParams::csl(nan, 1e-7), std::invalid_argument);
    CHECK_THROWS_AS((void)tauclock::ModelParams::dp(nan), std::invalid_argument);
}

TEST_CASE("bounds check accepts the reference models") {
    CHECK(tauclock::check_bounds(tauclock::standard_params(tauclock::ModelKind::Csl)).within);
    CHECK(tauclock::check_bounds(tauclock::standard_params(tauclock::ModelKind::Dp)).within);
}

TEST_CASE("CSL bounds are strict on both ends") {
    CHECK_FALSE(tauclock::check_bounds(tauclock::ModelParams::csl(1e-20, 1e-7)).within);
    CHECK_FALSE(tauclock::check_bounds(tauclock::ModelParams::csl(1e-11, 1e-7)).within);
    CHECK_FALSE(tauclock::check_bounds(tauclock::ModelParams::csl(1e-25, 1e-7)).within);
    CHECK(tauclock::check_bounds(tauclock::ModelParams::csl(1.0000001e-20, 1e-7)).within);
    CHECK(tauclock::check_bounds(tauclock::ModelParams::csl(0.9999999e-11, 1e-7)).within);
}

TEST_CASE("DP bound is inclusive at sigma = 4.94e-10 m") {
    CHECK(tauclock::check_bounds(tauclock::ModelParams::dp(4.94e-10)).within);
    CHECK_FALSE(tauclock::check_bounds(tauclock::ModelParams::dp(4.9399e-10)).within);
    CHECK(tauclock::check_bounds(tauclock::ModelParams::dp(1e-6)).within);
}

TEST_CASE("out-of-bound reports carry a diagnostic message") {
    const auto report = tauclock::check_bounds(tauclock::ModelParams::csl(1e-25, 1e-7));
    REQUIRE_FALSE(report.within);
    REQUIRE_FALSE(report.messages.empty());
    CHECK_FALSE(report.messages.front().empty());
}
