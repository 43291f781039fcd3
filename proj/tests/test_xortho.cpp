#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "direop/specialfn.hpp"
#include "direop/xortho.hpp"

using namespace direop;
using namespace direop::xortho;
namespace sf = direop::specialfn;

TEST_CASE("X_1 Laguerre closed forms") {
    const double a = 1.5;
    const XmLaguerreSpec spec{1, a};
    for (double z : {0.0, 0.3, 1.0, 2.7, 6.4}) {
        CHECK_THAT(xm_laguerre(spec, 0, z), Catch::Matchers::WithinAbs(1.0 + a + z, 1e-10));
        CHECK_THAT(xm_laguerre(spec, 1, z),
                   Catch::Matchers::WithinAbs(a * (a + 2.0) - z * z, 1e-10));
    }
    CHECK_THAT(xm_laguerre(spec, 0, 2.0), Catch::Matchers::WithinAbs(4.5, 1e-12));
    CHECK_THAT(xm_laguerre(spec, 1, 1.0), Catch::Matchers::WithinAbs(4.25, 1e-12));
}

TEST_CASE("X_m Laguerre m = 0 reduces exactly to the classical polynomial") {
    std::mt19937 rng(321);
    std::uniform_real_distribution<double> par(-2.0, 3.0);
    std::uniform_real_distribution<double> arg(0.0, 8.0);
    std::uniform_int_distribution<int> deg(0, 8);
    for (int trial = 0; trial < 50; ++trial) {
        const double a = par(rng);
        const int n = deg(rng);
        const double z = arg(rng);
        const double ours = xm_laguerre(XmLaguerreSpec{0, a}, n, z);
        const double classical = sf::laguerre(n, a, z);
        CHECK(std::abs(ours - classical) <= 1e-12 * std::max(1.0, std::abs(classical)));
    }
}

TEST_CASE("X_m Laguerre denominator") {
    CHECK(xm_laguerre_denominator(XmLaguerreSpec{0, 0.7}, 5.1) == 1.0);
    // L_1^{(0.5)}(-1) = 1 + 0.5 + 1
    CHECK_THAT(xm_laguerre_denominator(XmLaguerreSpec{1, 1.5}, 1.0),
               Catch::Matchers::WithinAbs(2.5, 1e-12));
    for (double z = 0.1; z < 50.0; z *= 1.7)
        CHECK(xm_laguerre_denominator(XmLaguerreSpec{2, 1.5}, z) > 0.0);
}

TEST_CASE("X_m Jacobi m = 0 constant is exactly 1") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> par(0.5, 4.0);
    std::uniform_real_distribution<double> arg(-0.95, 0.95);
    std::uniform_int_distribution<int> deg(0, 8);
    for (int trial = 0; trial < 50; ++trial) {
        const double a = par(rng), b = par(rng), z = arg(rng);
        const int n = deg(rng);
        const double ours = xm_jacobi(XmJacobiSpec{0, a, b}, n, z);
        const double classical = sf::jacobi(n, a, b, z);
        // computed ratio, not an assumed one: the m = 0 constant is 1
        CHECK(std::abs(ours - classical) <= 1e-10 * std::max(1.0, std::abs(classical)));
    }
}

TEST_CASE("X_m Jacobi frozen value and its term-by-term oracle") {
    const double a = 2.5, b = 3.5, z = 0.0;
    const int n = 1, m = 1;
    // oracle: the defining bilinear combination evaluated with classical pieces
    const double t1 = (1 + a + b + n) / (2 * (1 + a + n)) * (z - 1) *
                      sf::jacobi(m, -a - 1, b - 1, z) * sf::jacobi(n - 1, a + 2, b, z);
    const double t2 = (1 + a - m) / (a + 1 + n) * sf::jacobi(m, -2 - a, b, z) *
                      sf::jacobi(n, a + 1, b - 1, z);
    const double oracle = -(t1 + t2);
    CHECK_THAT(oracle, Catch::Matchers::WithinAbs(-14.0 / 9.0, 1e-12));
    CHECK_THAT(xm_jacobi(XmJacobiSpec{m, a, b}, n, z),
               Catch::Matchers::WithinAbs(-14.0 / 9.0, 1e-12));
}

TEST_CASE("X_m Jacobi degenerate coefficient denominator") {
    CHECK_THROWS_AS(xm_jacobi(XmJacobiSpec{1, -2.0, 1.0}, 1, 0.3), degenerate_parameter_error);
}

TEST_CASE("X_m Jacobi denominator polynomials") {
    CHECK(xm_jacobi_denominator(XmJacobiSpec{0, 1.0, 2.0}, 0.4) == 1.0);

    // Scarf indices at A=3, B=1: the degree-1 denominator is proportional to
    // 2A - 1 - 2Bz with ratio exactly -1/2
    const double A = 3.0, B = 1.0;
    const double a = A - B - 0.5, b = A + B - 0.5;
    for (double z : {-0.9, -0.2, 0.5, 0.8}) {
        const double den = xm_jacobi_denominator(XmJacobiSpec{1, a, b}, z);
        CHECK_THAT(den / (2 * A - 1 - 2 * B * z), Catch::Matchers::WithinAbs(-0.5, 1e-12));
    }

    // frozen: P_2^{(-3.5, 2.5)}(0.5), direct classical evaluation
    CHECK_THAT(sf::jacobi(2, -3.5, 2.5, 0.5), Catch::Matchers::WithinAbs(2.8125, 1e-12));
    CHECK_THAT(xm_jacobi_denominator(XmJacobiSpec{2, 2.5, 3.5}, 0.5),
               Catch::Matchers::WithinAbs(2.8125, 1e-12));
}

TEST_CASE("X_m derivatives match the closed forms and finite differences") {
    const XmLaguerreSpec l1{1, 1.5};
    for (double z : {0.2, 1.0, 3.3}) {
        CHECK_THAT(xm_derivative(l1, 0, z), Catch::Matchers::WithinAbs(1.0, 1e-12));
        CHECK_THAT(xm_derivative(l1, 1, z), Catch::Matchers::WithinAbs(-2.0 * z, 1e-12));
    }

    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> par(0.5, 3.5);
    std::uniform_int_distribution<int> deg(0, 5);
    std::uniform_int_distribution<int> mm(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = mm(rng), n = deg(rng);
        const double h = 1e-6;

        const XmLaguerreSpec ls{m, par(rng)};
        const double zl = std::uniform_real_distribution<double>(0.1, 6.0)(rng);
        const double fdl = (xm_laguerre(ls, n, zl + h) - xm_laguerre(ls, n, zl - h)) / (2 * h);
        const double lscale = std::max({1.0, std::abs(xm_laguerre(ls, n, zl)),
                                        std::abs(xm_derivative(ls, n, zl))});
        CHECK(std::abs(fdl - xm_derivative(ls, n, zl)) < 1e-7 * lscale);

        const XmJacobiSpec js{m, par(rng), par(rng)};
        const double zs = std::uniform_real_distribution<double>(-0.9, 0.9)(rng);
        const double fdj = (xm_jacobi(js, n, zs + h) - xm_jacobi(js, n, zs - h)) / (2 * h);
        const double jscale = std::max({1.0, std::abs(xm_jacobi(js, n, zs)),
                                        std::abs(xm_derivative(js, n, zs))});
        CHECK(std::abs(fdj - xm_derivative(js, n, zs)) < 1e-7 * jscale);
    }
}

TEST_CASE("monomial coefficients and root bounds") {
    std::mt19937 rng(2718);
    std::uniform_real_distribution<double> par(-4.0, 4.0);
    std::uniform_int_distribution<int> deg(0, 8);
    auto horner = [](const std::vector<double>& c, double z) {
        double v = 0.0;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * z + c[i];
        return v;
    };
    for (int trial = 0; trial < 60; ++trial) {
        const int m = deg(rng);
        const double a = par(rng), b = par(rng);
        const std::vector<double> cj = jacobi_coefficients(m, a, b);
        const std::vector<double> cl = laguerre_neg_coefficients(m, std::abs(a));
        for (double z : {-2.3, -0.4, 0.9, 3.1}) {
            const double pj = sf::jacobi(m, a, b, z);
            CHECK(std::abs(horner(cj, z) - pj) <= 1e-10 * std::max(1.0, std::abs(pj)));
            const double pl = sf::laguerre(m, std::abs(a), -z);
            CHECK(std::abs(horner(cl, z) - pl) <= 1e-10 * std::max(1.0, std::abs(pl)));
        }
    }
    // the bound dominates a known root: P_1^{(a,b)} vanishes at
    // z = (b - a) / (a + b + 2) shifted, via (a+1) + (a+b+2)(z-1)/2 = 0
    const double a = 1.5, b = 3.5;
    const double root = 1.0 - 2.0 * (a + 1.0) / (a + b + 2.0);
    CHECK(cauchy_root_bound(jacobi_coefficients(1, a, b)) >= std::abs(root));
    CHECK(cauchy_root_bound({3.0}) == 0.0);  // constants have no roots
}

TEST_CASE("denominator nonzero scan") {
    const XmLaguerreSpec osc{2, 1.5};
    const Grid zgrid = make_grid(0.0, 50.0, 4096);
    CHECK(denominator_nonzero_scan([&](double z) { return xm_laguerre_denominator(osc, z); },
                                   zgrid));

    const double A1 = 3.0, B1 = 1.0;
    const XmJacobiSpec scarf_ok{1, A1 - B1 - 0.5, A1 + B1 - 0.5};
    const Grid sgrid = make_grid(-1.0, 1.0, 4096);
    CHECK(denominator_nonzero_scan(
        [&](double z) { return xm_jacobi_denominator(scarf_ok, z); }, sgrid));

    // B large enough that 2A - 1 - 2Bz crosses zero inside (-1, 1)
    const double A2 = 1.0, B2 = 3.0;
    const XmJacobiSpec scarf_bad{1, A2 - B2 - 0.5, A2 + B2 - 0.5};
    CHECK_FALSE(denominator_nonzero_scan(
        [&](double z) { return xm_jacobi_denominator(scarf_bad, z); }, sgrid));
}
