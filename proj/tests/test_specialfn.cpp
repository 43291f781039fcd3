#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <functional>
#include <random>

#include "direop/specialfn.hpp"

using namespace direop;
using namespace direop::specialfn;

namespace {

double fd_central(const std::function<double(double)>& f, double z, double h = 1e-6) {
    return (f(z + h) - f(z - h)) / (2.0 * h);
}

} // namespace

TEST_CASE("laguerre basics and frozen values") {
    CHECK(laguerre(0, 1.5, 7.3) == 1.0);
    CHECK(laguerre(-1, 0.5, 2.0) == 0.0);

    // oracle: the degree-2 series written out, (a+1)(a+2)/2 - (a+2) z + z^2/2
    const double a = 1.5, z = 2.0;
    const double by_hand = (a + 1) * (a + 2) / 2.0 - (a + 2) * z + z * z / 2.0;
    CHECK_THAT(by_hand, Catch::Matchers::WithinAbs(-0.625, 1e-12));
    CHECK_THAT(laguerre(2, a, z), Catch::Matchers::WithinAbs(-0.625, 1e-12));
}

TEST_CASE("laguerre_deriv frozen values against the finite-difference oracle") {
    CHECK(laguerre_deriv(0, 2.0, 1.0) == 0.0);
    CHECK_THAT(laguerre_deriv(1, 1.5, 0.7), Catch::Matchers::WithinAbs(-1.0, 1e-12));

    const double fd = fd_central([](double z) { return laguerre(2, 1.5, z); }, 2.0);
    CHECK_THAT(fd, Catch::Matchers::WithinAbs(-1.5, 1e-8));
    CHECK_THAT(laguerre_deriv(2, 1.5, 2.0), Catch::Matchers::WithinAbs(-1.5, 1e-12));
}

TEST_CASE("jacobi basics and frozen values") {
    CHECK(jacobi(0, -2.5, 1.5, 0.3) == 1.0);
    CHECK(jacobi(-1, 0.5, 0.5, 0.3) == 0.0);
    for (double z : {-0.7, 0.0, 0.4, 0.95})
        CHECK_THAT(jacobi(1, 0.0, 0.0, z), Catch::Matchers::WithinAbs(z, 1e-14));

    // oracle: degree-1 closed form (a+1) + (a+b+2)(z-1)/2
    const double a = 1.5, b = 2.5, z = 0.0;
    const double closed = (a + 1) + (a + b + 2) * (z - 1) / 2.0;
    CHECK_THAT(closed, Catch::Matchers::WithinAbs(-0.5, 1e-12));
    CHECK_THAT(jacobi(1, a, b, z), Catch::Matchers::WithinAbs(-0.5, 1e-12));
}

TEST_CASE("jacobi_deriv frozen values against the finite-difference oracle") {
    CHECK(jacobi_deriv(0, 1.0, 1.0, 0.5) == 0.0);
    CHECK_THAT(jacobi_deriv(1, 0.0, 0.0, 0.9), Catch::Matchers::WithinAbs(1.0, 1e-12));

    const double fd = fd_central([](double z) { return jacobi(2, -1.5, 2.5, z); }, 0.4);
    CHECK_THAT(fd, Catch::Matchers::WithinAbs(-2.0, 1e-8));
    CHECK_THAT(jacobi_deriv(2, -1.5, 2.5, 0.4), Catch::Matchers::WithinAbs(-2.0, 1e-12));
}

TEST_CASE("log_gamma values and accuracy") {
    CHECK_THAT(log_gamma(1.0), Catch::Matchers::WithinAbs(0.0, 1e-14));
    CHECK_THAT(log_gamma(0.5), Catch::Matchers::WithinAbs(0.5 * std::log(M_PI), 1e-13));
    CHECK_THAT(log_gamma(6.0), Catch::Matchers::WithinAbs(std::log(120.0), 1e-12));
    for (double x = 0.5; x <= 50.0; x += 0.37)
        CHECK_THAT(log_gamma(x), Catch::Matchers::WithinAbs(std::lgamma(x), 1e-12));
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-3.0), std::domain_error);
}

TEST_CASE("invalid arguments are rejected") {
    CHECK_THROWS_AS(laguerre(-2, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(laguerre(2, 1.0, std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(3, std::nan(""), 0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(-3, 0.5, 0.5, 0.5), std::invalid_argument);
}

TEST_CASE("three-term recurrences hold on random parameters") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> par(-3.0, 3.0);
    std::uniform_real_distribution<double> arg(-5.0, 5.0);
    std::uniform_int_distribution<int> deg(1, 9);

    for (int trial = 0; trial < 300; ++trial) {
        const int n = deg(rng);
        const double a = par(rng);
        const double z = arg(rng);

        // (n+1) L_{n+1} = (2n+1+a-z) L_n - (n+a) L_{n-1}
        const double lhs = (n + 1) * laguerre(n + 1, a, z);
        const double rhs = (2 * n + 1 + a - z) * laguerre(n, a, z) - (n + a) * laguerre(n - 1, a, z);
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        CHECK(std::abs(lhs - rhs) / scale < 1e-9);

        const double b = par(rng);
        const double x = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
        const double lead = 2.0 * n * (n + a + b) * (2 * n + a + b - 2);
        if (std::abs(lead) > 1e-8) {
            const double jl = lead * jacobi(n, a, b, x);
            const double jr =
                (2 * n + a + b - 1) * ((2 * n + a + b) * (2 * n + a + b - 2) * x + a * a - b * b) *
                    jacobi(n - 1, a, b, x) -
                2.0 * (n + a - 1) * (n + b - 1) * (2 * n + a + b) * jacobi(n - 2, a, b, x);
            const double jscale = std::max({1.0, std::abs(jl), std::abs(jr)});
            CHECK(std::abs(jl - jr) / jscale < 1e-9);
        }
    }
}

TEST_CASE("derivative rules match central finite differences") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> par(-3.0, 3.0);
    std::uniform_real_distribution<double> arg(-5.0, 5.0);
    std::uniform_int_distribution<int> deg(0, 10);
    // the FD oracle has roundoff ~ eps*|f|/h and truncation ~ |f'''| h^2/6,
    // both proportional to the local magnitude of the polynomial family, so
    // the 1e-7 tolerance is scaled by that magnitude where it exceeds 1
    for (int trial = 0; trial < 200; ++trial) {
        const int n = deg(rng);
        const double a = par(rng), b = par(rng), z = arg(rng);
        const double zj = z * 0.19;
        const double lscale =
            std::max({1.0, std::abs(laguerre(n, a, z)), std::abs(laguerre_deriv(n, a, z)),
                      std::abs(laguerre_deriv2(n, a, z))});
        const double jscale =
            std::max({1.0, std::abs(jacobi(n, a, b, zj)), std::abs(jacobi_deriv(n, a, b, zj)),
                      std::abs(jacobi_deriv2(n, a, b, zj))});
        const double fdl = fd_central([&](double t) { return laguerre(n, a, t); }, z);
        CHECK(std::abs(fdl - laguerre_deriv(n, a, z)) < 1e-7 * lscale);
        const double fdj = fd_central([&](double t) { return jacobi(n, a, b, t); }, zj);
        CHECK(std::abs(fdj - jacobi_deriv(n, a, b, zj)) < 1e-7 * jscale);
        const double fdl2 = fd_central([&](double t) { return laguerre_deriv(n, a, t); }, z);
        CHECK(std::abs(fdl2 - laguerre_deriv2(n, a, z)) < 1e-7 * lscale);
        const double fdj2 = fd_central([&](double t) { return jacobi_deriv(n, a, b, t); }, zj);
        CHECK(std::abs(fdj2 - jacobi_deriv2(n, a, b, zj)) < 1e-7 * jscale);
    }
}

TEST_CASE("laguerre at the origin equals the generalized binomial") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> par(-3.0, 3.0);
    std::uniform_int_distribution<int> deg(0, 12);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = deg(rng);
        const double a = par(rng);
        const double lhs = laguerre(n, a, 0.0);
        const double rhs = binomial_product(n + a, n);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}
