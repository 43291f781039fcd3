#pragma once

#include <cmath>
#include <limits>

#include "direop/errors.hpp"
#include "direop/jet.hpp"

namespace direop::specialfn {

namespace detail {

inline void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

inline void require_index(int n, const char* what) {
    if (n < -1) throw std::invalid_argument(std::string(what) + " must be >= -1");
}

} // namespace detail

/// Generalized binomial C(x, j) for real x and integer j >= 0, computed as the
/// product prod_{i=1..j} (x - i + 1)/i. Valid for any real x, including the
/// negative parameter shifts the X_m families need.
inline double binomial_product(double x, int j) {
    if (j < 0) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= j; ++i) r *= (x - i + 1) / i;
    return r;
}

/// Generalized Laguerre L_n^{(alpha)}(z) by the finite series
/// sum_k (-1)^k C(n+alpha, n-k) z^k / k!. Degree -1 is the zero polynomial.
/// Series evaluation (not recurrence) keeps negative parameter values safe.
inline double laguerre(int n, double alpha, double z) {
    detail::require_index(n, "laguerre degree");
    detail::require_finite(alpha, "laguerre alpha");
    detail::require_finite(z, "laguerre argument");
    if (n < 0) return 0.0;
    double sum = 0.0;
    double zk = 1.0;        // z^k / k!
    double sign = 1.0;
    for (int k = 0; k <= n; ++k) {
        sum += sign * binomial_product(n + alpha, n - k) * zk;
        zk *= z / (k + 1);
        sign = -sign;
    }
    return sum;
}

/// d/dz L_n^{(alpha)}(z) = -L_{n-1}^{(alpha+1)}(z).
inline double laguerre_deriv(int n, double alpha, double z) {
    detail::require_index(n, "laguerre degree");
    if (n <= 0) return 0.0;
    return -laguerre(n - 1, alpha + 1.0, z);
}

/// d2/dz2 L_n^{(alpha)}(z) = L_{n-2}^{(alpha+2)}(z).
inline double laguerre_deriv2(int n, double alpha, double z) {
    detail::require_index(n, "laguerre degree");
    if (n <= 1) return 0.0;
    return laguerre(n - 2, alpha + 2.0, z);
}

/// Jacobi P_n^{(alpha,beta)}(z) by the finite series
/// sum_k C(n+alpha, n-k) C(n+beta, k) ((z-1)/2)^k ((z+1)/2)^{n-k},
/// product-form binomials, any real parameters. Degree -1 is zero.
inline double jacobi(int n, double alpha, double beta, double z) {
    detail::require_index(n, "jacobi degree");
    detail::require_finite(alpha, "jacobi alpha");
    detail::require_finite(beta, "jacobi beta");
    detail::require_finite(z, "jacobi argument");
    if (n < 0) return 0.0;
    const double u = (z - 1.0) / 2.0;
    const double v = (z + 1.0) / 2.0;
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        sum += binomial_product(n + alpha, n - k) * binomial_product(n + beta, k) *
               std::pow(u, k) * std::pow(v, n - k);
    }
    return sum;
}

/// d/dz P_n^{(alpha,beta)}(z) = (n+alpha+beta+1)/2 P_{n-1}^{(alpha+1,beta+1)}(z).
inline double jacobi_deriv(int n, double alpha, double beta, double z) {
    detail::require_index(n, "jacobi degree");
    if (n <= 0) return 0.0;
    return 0.5 * (n + alpha + beta + 1.0) * jacobi(n - 1, alpha + 1.0, beta + 1.0, z);
}

inline double jacobi_deriv2(int n, double alpha, double beta, double z) {
    detail::require_index(n, "jacobi degree");
    if (n <= 1) return 0.0;
    return 0.25 * (n + alpha + beta + 1.0) * (n + alpha + beta + 2.0) *
           jacobi(n - 2, alpha + 2.0, beta + 2.0, z);
}

/// ln Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 terms).
inline double log_gamma(double x) {
    detail::require_finite(x, "log_gamma argument");
    if (x <= 0.0) throw std::domain_error("log_gamma requires a positive argument");
    static constexpr double coeff[9] = {
        0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,     12.507343278686905,
        -0.13857109526572012,     9.9843695780195716e-6,  1.5056327351493116e-7};
    if (x < 0.5) {
        // reflection keeps the series argument in its accurate range
        return std::log(M_PI / std::sin(M_PI * x)) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double a = coeff[0];
    for (int i = 1; i < 9; ++i) a += coeff[i] / (z + i);
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(a);
}

// ---- jets in the polynomial argument (seeded from the derivative rules) ----

inline Jet2 laguerre_jet(int n, double alpha, double z) {
    return {laguerre(n, alpha, z), laguerre_deriv(n, alpha, z), laguerre_deriv2(n, alpha, z)};
}

/// L_n^{(alpha)}(-z) with derivatives taken in z.
inline Jet2 laguerre_neg_jet(int n, double alpha, double z) {
    return {laguerre(n, alpha, -z),
            n >= 1 ? laguerre(n - 1, alpha + 1.0, -z) : 0.0,
            n >= 2 ? laguerre(n - 2, alpha + 2.0, -z) : 0.0};
}

inline Jet2 jacobi_jet(int n, double alpha, double beta, double z) {
    return {jacobi(n, alpha, beta, z), jacobi_deriv(n, alpha, beta, z),
            jacobi_deriv2(n, alpha, beta, z)};
}

} // namespace direop::specialfn
