#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tauclock/errors.hpp"
#include "tauclock/quadrature.hpp"

namespace {

double rel_err(double actual, double expected) {
    return std::abs(actual / expected - 1.0);
}

}  // namespace

TEST_CASE("degenerate interval integrates to zero") {
    const auto result = tauclock::integrate([](double x) { return x * x; }, 2.0, 2.0);
    CHECK(result.value == 0.0);
    CHECK(result.converged);
}

TEST_CASE("high-order polynomial integrates to machine accuracy") {
    // one panel of 15-point Gauss-Kronrod is exact up to degree 29
    const auto result = tauclock::integrate([](double x) { return std::pow(x, 20.0); },
                                            0.0, 1.0);
    CHECK(result.converged);
    CHECK(rel_err(result.value, 1.0 / 21.0) < 1e-13);
}

TEST_CASE("arctan integrand reproduces pi") {
    tauclock::QuadratureOptions options;
    options.rel_tol = 1e-12;
    const auto result = tauclock::integrate(
        [](double x) { return 4.0 / (1.0 + x * x); }, 0.0, 1.0, options);
    CHECK(result.converged);
    CHECK(rel_err(result.value, std::numbers::pi) < 1e-12);
    CHECK(result.error_estimate >= std::abs(result.value - std::numbers::pi));
}

TEST_CASE("truncated Gaussian reproduces sqrt(pi)") {
    tauclock::QuadratureOptions options;
    options.rel_tol = 1e-12;
    const auto result = tauclock::integrate(
        [](double x) { return std::exp(-x * x); }, -6.0, 6.0, options);
    CHECK(result.converged);
    const double sqrt_pi = 1.0 / std::numbers::inv_sqrtpi;
    CHECK(rel_err(result.value, sqrt_pi) < 1e-12);
}

TEST_CASE("oscillatory integrand with zero mean needs the absolute tolerance") {
    tauclock::QuadratureOptions options;
    options.rel_tol = 1e-10;
    options.abs_tol = 1e-12;
    const auto result = tauclock::integrate([](double x) { return std::sin(x); }, 0.0,
                                            20.0 * std::numbers::pi, options);
    CHECK(result.converged);
    CHECK(std::abs(result.value) < 1e-10);
}

TEST_CASE("integrable endpoint singularity converges under refinement") {
    tauclock::QuadratureOptions options;
    options.rel_tol = 1e-9;
    options.max_intervals = 100000;
    const auto result = tauclock::integrate(
        [](double x) { return 1.0 / std::sqrt(x); }, 1e-300, 1.0, options);
    CHECK(result.converged);
    CHECK(rel_err(result.value, 2.0) < 1e-6);
}

TEST_CASE("refinement budget exhaustion is reported, not hidden") {
    tauclock::QuadratureOptions options;
    options.rel_tol = 1e-12;
    options.max_intervals = 2;
    const auto result = tauclock::integrate(
        [](double x) { return 1.0 / std::sqrt(x); }, 1e-300, 1.0, options);
    CHECK_FALSE(result.converged);
    CHECK(result.error_estimate > 0.0);

    CHECK_THROWS_AS((void)tauclock::integrate_checked(
                        [](double x) { return 1.0 / std::sqrt(x); }, 1e-300, 1.0, options),
                    tauclock::convergence_error);
    try {
        (void)tauclock::integrate_checked([](double x) { return 1.0 / std::sqrt(x); },
                                          1e-300, 1.0, options);
    } catch (const tauclock::convergence_error& e) {
        CHECK(e.achieved_error > e.requested_error);
        CHECK(e.requested_error > 0.0);
    }
}

TEST_CASE("evaluation count reflects the panel tree") {
    const auto one_panel = tauclock::integrate([](double) { return 1.0; }, 0.0, 1.0);
    CHECK(one_panel.n_evaluations == 15);

    tauclock::QuadratureOptions options;
    options.rel_tol = 1e-12;
    const auto refined = tauclock::integrate(
        [](double x) { return std::exp(-x * x); }, -6.0, 6.0, options);
    CHECK(refined.n_evaluations > 15);
    CHECK(refined.n_evaluations % 15 == 0);
}

TEST_CASE("invalid quadrature requests are rejected") {
    const auto f = [](double x) { return x; };
    CHECK_THROWS_AS((void)tauclock::integrate(f, 1.0, 0.0), std::invalid_argument);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS((void)tauclock::integrate(f, 0.0, inf), std::invalid_argument);
    tauclock::QuadratureOptions bad_tol;
    bad_tol.rel_tol = 0.0;
    bad_tol.abs_tol = 0.0;
    CHECK_THROWS_AS((void)tauclock::integrate(f, 0.0, 1.0, bad_tol), std::invalid_argument);
    tauclock::QuadratureOptions bad_budget;
    bad_budget.max_intervals = 0;
    CHECK_THROWS_AS((void)tauclock::integrate(f, 0.0, 1.0, bad_budget),
                    std::invalid_argument);
}

TEST_CASE("NaN from the integrand poisons the result instead of converging") {
    const auto result = tauclock::integrate(
        [](double x) { return x < 0.5 ? 1.0 : std::numeric_limits<double>::quiet_NaN(); },
        0.0, 1.0);
    CHECK_FALSE(result.converged);
}
