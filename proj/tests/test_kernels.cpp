#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "reference_values.hpp"
#include "tauclock/constants.hpp"
#include "tauclock/kernels.hpp"
#include "tauclock/params.hpp"
#include "tauclock/quadrature.hpp"

namespace ref = tauclock_test_ref;

using tauclock::ModelKind;
using tauclock::ModelParams;

namespace {

constexpr double kSqrtPi = 1.0 / std::numbers::inv_sqrtpi;

double rel_err(double actual, double expected) {
    return std::abs(actual / expected - 1.0);
}

}  // namespace

TEST_CASE("kernel shapes are normalized to one at the origin") {
    CHECK(tauclock::kernel_shape(ModelKind::Csl, 0.0) == 1.0);
    CHECK(tauclock::kernel_shape(ModelKind::Dp, 0.0) == 1.0);
}

TEST_CASE("kernel shape spot values match the frozen references") {
    CHECK(rel_err(tauclock::kernel_shape(ModelKind::Csl, 4.0), ref::kShapeCslAt4) < 1e-13);
    CHECK(rel_err(tauclock::kernel_shape(ModelKind::Dp, 2.0), ref::kShapeDpAt2) < 1e-13);
    // CSL shape is exactly exp(-u^2/4)
    CHECK(rel_err(tauclock::kernel_shape(ModelKind::Csl, 2.0), std::exp(-1.0)) < 1e-14);
}

TEST_CASE("DP shape switches between series and erf branches continuously") {
    const double u_switch = 1e-3;
    const double below = tauclock::kernel_shape(ModelKind::Dp, u_switch * (1.0 - 1e-9));
    const double above = tauclock::kernel_shape(ModelKind::Dp, u_switch * (1.0 + 1e-9));
    CHECK(rel_err(below, above) < 1e-12);
}

TEST_CASE("DP shape approaches sqrt(pi)/u at large separation") {
    const double u = 1e6;
    CHECK(rel_err(tauclock::kernel_shape(ModelKind::Dp, u), kSqrtPi / u) < 1e-10);
}

TEST_CASE("kernel shapes decrease monotonically and stay positive") {
    for (const ModelKind kind : {ModelKind::Csl, ModelKind::Dp}) {
        double previous = tauclock::kernel_shape(kind, 0.0);
        for (int i = 1; i <= 500; ++i) {
            const double u = 0.1 * i;
            const double value = tauclock::kernel_shape(kind, u);
            CHECK(value > 0.0);
            CHECK(value < previous);
            previous = value;
        }
    }
}

TEST_CASE("smeared kernel factorizes into zero-lag value times shape") {
    for (const ModelKind kind : {ModelKind::Csl, ModelKind::Dp}) {
        const ModelParams params = tauclock::standard_params(kind);
        const double zero = tauclock::kernel_zero(params);
        for (const double u : {1e-4, 0.1, 1.0, 5.0, 30.0}) {
            const double direct = tauclock::kernel_smeared(params, u * params.sigma_m);
            CHECK(rel_err(direct, zero * tauclock::kernel_shape(kind, u)) < 1e-12);
        }
    }
}

TEST_CASE("zero-lag values follow the closed forms") {
    const tauclock::PhysicalConstants k;
    const ModelParams csl = tauclock::standard_params(ModelKind::Csl);
    CHECK(rel_err(tauclock::kernel_zero(csl),
                  k.hbar * k.hbar * csl.lambda_per_s / (k.m0 * k.m0)) < 1e-14);
    const ModelParams dp = tauclock::standard_params(ModelKind::Dp);
    CHECK(rel_err(tauclock::kernel_zero(dp),
                  k.hbar * k.G / (kSqrtPi * dp.sigma_m)) < 1e-14);
}

TEST_CASE("DP kernel at finite separation matches the erf form") {
    const tauclock::PhysicalConstants k;
    const ModelParams dp = tauclock::standard_params(ModelKind::Dp);
    const double r = 2.0 * dp.sigma_m;
    const double expected = k.hbar * k.G / r * std::erf(1.0);
    CHECK(rel_err(tauclock::kernel_smeared(dp, r), expected) < 1e-13);
}

TEST_CASE("DP Fourier transform matches the closed form and its small-k divergence") {
    const tauclock::PhysicalConstants k;
    const ModelParams dp = tauclock::standard_params(ModelKind::Dp);
    const double kk = 1.0 / dp.sigma_m;
    const double expected =
        4.0 * std::numbers::pi * k.hbar * k.G * dp.sigma_m * dp.sigma_m * std::exp(-1.0);
    CHECK(rel_err(tauclock::kernel_dp_fourier(dp, kk), expected) < 1e-13);

    const double k_small = 1e-8 / dp.sigma_m;
    const double limit = 4.0 * std::numbers::pi * k.hbar * k.G / (k_small * k_small);
    CHECK(rel_err(tauclock::kernel_dp_fourier(dp, k_small), limit) < 1e-10);
}

TEST_CASE("Fourier transform is only defined for the DP kernel at k > 0") {
    const ModelParams csl = tauclock::standard_params(ModelKind::Csl);
    const ModelParams dp = tauclock::standard_params(ModelKind::Dp);
    CHECK_THROWS_AS((void)tauclock::kernel_dp_fourier(csl, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)tauclock::kernel_dp_fourier(dp, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)tauclock::kernel_dp_fourier(dp, -1.0), std::invalid_argument);
}

TEST_CASE("negative or non-finite separations are rejected") {
    const ModelParams dp = tauclock::standard_params(ModelKind::Dp);
    CHECK_THROWS_AS((void)tauclock::kernel_shape(ModelKind::Csl, -1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)tauclock::kernel_smeared(dp, -1e-9), std::invalid_argument);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS((void)tauclock::kernel_shape(ModelKind::Dp, nan), std::invalid_argument);
}

// Independent route 1: invert the DP Fourier transform numerically.  The
// radial inversion reduces to integral(sin(q x) exp(-q^2) / q, q = 0..inf)
// with x = r / sigma, which the direct-space kernel must reproduce.
TEST_CASE("DP kernel agrees with the numerically inverted Fourier transform") {
    const tauclock::PhysicalConstants k;
    const ModelParams dp = tauclock::standard_params(ModelKind::Dp);
    tauclock::QuadratureOptions options;
    options.rel_tol = 1e-12;
    options.max_intervals = 100000;

    for (const double x : {0.1, 0.5, 1.0, 3.0, 10.0, 20.0}) {
        // tail beyond q = 9 is below exp(-81), irrelevant at this tolerance
        const auto integral = tauclock::integrate(
            [x](double q) { return std::sin(q * x) * std::exp(-q * q) / q; }, 1e-12, 9.0,
            options);
        REQUIRE(integral.converged);
        const double r = x * dp.sigma_m;
        const double reconstructed =
            2.0 * k.hbar * k.G / (std::numbers::pi * r) * integral.value;
        CHECK(rel_err(tauclock::kernel_smeared(dp, r), reconstructed) < 1e-6);
    }
}

// Independent route 2: the CSL shape is the self-convolution of a Gaussian
// smearing profile.  In spherical coordinates (lengths in units of sigma) the
// convolution reduces to a 1D radial integral; the piecewise integrand keeps
// the sinh form from overflowing at large r.
TEST_CASE("CSL shape agrees with the numerically convolved smearing profile") {
    tauclock::QuadratureOptions options;
    options.rel_tol = 1e-12;
    options.max_intervals = 100000;
    const double norm = std::pow(4.0 * std::numbers::pi, -1.5);

    for (const double r : {0.1, 1.0, 5.0, 10.0, 20.0}) {
        const auto integral = tauclock::integrate(
            [r](double s) {
                if (r * s < 1.0) {
                    return 2.0 * s * std::sinh(r * s) * std::exp(-s * s - r * r / 2.0);
                }
                const double a = s - r / 2.0;
                const double b = s + r / 2.0;
                return s * std::exp(-r * r / 4.0) * (std::exp(-a * a) - std::exp(-b * b));
            },
            0.0, r / 2.0 + 10.0, options);
        REQUIRE(integral.converged);
        const double convolved = 2.0 * std::numbers::pi / r *
                                 std::pow(2.0 * std::numbers::pi, -3.0) * integral.value;
        const double expected = norm * tauclock::kernel_shape(ModelKind::Csl, r);
        CHECK(rel_err(convolved, expected) < 1e-9);
    }
}
