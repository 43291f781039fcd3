#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "direop/errors.hpp"
#include "direop/grid.hpp"
#include "direop/jet.hpp"
#include "direop/specialfn.hpp"

namespace direop::xortho {

/// X_m Laguerre family: codimension m and the index alpha of the numerator
/// Laguerre factors. m = 0 collapses every evaluation to the classical
/// polynomial.
struct XmLaguerreSpec {
    int m = 0;
    double alpha = 0.0;
};

/// X_m Jacobi family; m = 0 collapses to classical Jacobi.
struct XmJacobiSpec {
    int m = 0;
    double alpha = 0.0;
    double beta = 0.0;
};

namespace detail {

inline void require_xm(int m, int n) {
    if (m < 0) throw std::invalid_argument("X_m codimension m must be >= 0");
    if (n < 0) throw std::invalid_argument("X_m polynomial index n must be >= 0");
}

} // namespace detail

/// \hat L_{n+m}^{(alpha)}(z) = L_m^{(alpha)}(-z) L_n^{(alpha-1)}(z)
///                           + L_m^{(alpha-1)}(-z) L_{n-1}^{(alpha)}(z),
/// with L_{-1} = 0 extending the combination to n = 0. Returned as a jet in z.
inline Jet2 xm_laguerre_jet(const XmLaguerreSpec& spec, int n, double z) {
    detail::require_xm(spec.m, n);
    using specialfn::laguerre_jet;
    using specialfn::laguerre_neg_jet;
    const Jet2 a = laguerre_neg_jet(spec.m, spec.alpha, z) * laguerre_jet(n, spec.alpha - 1.0, z);
    const Jet2 b = laguerre_neg_jet(spec.m, spec.alpha - 1.0, z) * laguerre_jet(n - 1, spec.alpha, z);
    return a + b;
}

/// Denominator polynomial of the extended oscillator states: L_m^{(alpha-1)}(-z).
inline Jet2 xm_laguerre_denominator_jet(const XmLaguerreSpec& spec, double z) {
    detail::require_xm(spec.m, 0);
    return specialfn::laguerre_neg_jet(spec.m, spec.alpha - 1.0, z);
}

/// \hat P_{n+m}^{(alpha,beta)}(z), the bilinear Jacobi combination
///   (-1)^m [ (1+alpha+beta+n)/(2(1+alpha+n)) (z-1)
///              P_m^{(-alpha-1,beta-1)}(z) P_{n-1}^{(alpha+2,beta)}(z)
///          + (1+alpha-m)/(alpha+1+n)
///              P_m^{(-2-alpha,beta)}(z) P_n^{(alpha+1,beta-1)}(z) ],
/// with P_{-1} = 0. Returned as a jet in z.
inline Jet2 xm_jacobi_jet(const XmJacobiSpec& spec, int n, double z) {
    detail::require_xm(spec.m, n);
    const double a = spec.alpha;
    const double b = spec.beta;
    if (std::abs(a + 1.0 + n) < 1e-14)
        throw degenerate_parameter_error("X_m Jacobi coefficient denominator alpha+1+n vanishes");
    using specialfn::jacobi_jet;
    const Jet2 zj = Jet2::variable(z);
    const double ca = (1.0 + a + b + n) / (2.0 * (1.0 + a + n));
    const double cb = (1.0 + a - spec.m) / (a + 1.0 + n);
    const Jet2 t1 = ca * (zj - 1.0) * jacobi_jet(spec.m, -a - 1.0, b - 1.0, z) *
                    jacobi_jet(n - 1, a + 2.0, b, z);
    const Jet2 t2 = cb * jacobi_jet(spec.m, -2.0 - a, b, z) * jacobi_jet(n, a + 1.0, b - 1.0, z);
    const double sign = (spec.m % 2 == 0) ? 1.0 : -1.0;
    return sign * (t1 + t2);
}

/// Denominator polynomial of the extended Jacobi-family states:
/// P_m^{(-alpha-1, beta-1)}(z).
inline Jet2 xm_jacobi_denominator_jet(const XmJacobiSpec& spec, double z) {
    detail::require_xm(spec.m, 0);
    return specialfn::jacobi_jet(spec.m, -spec.alpha - 1.0, spec.beta - 1.0, z);
}

// ---- scalar surface ----

inline double xm_laguerre(const XmLaguerreSpec& spec, int n, double z) {
    return xm_laguerre_jet(spec, n, z).f;
}
inline double xm_laguerre_denominator(const XmLaguerreSpec& spec, double z) {
    return xm_laguerre_denominator_jet(spec, z).f;
}
inline double xm_jacobi(const XmJacobiSpec& spec, int n, double z) {
    return xm_jacobi_jet(spec, n, z).f;
}
inline double xm_jacobi_denominator(const XmJacobiSpec& spec, double z) {
    return xm_jacobi_denominator_jet(spec, z).f;
}

/// Exact z-derivatives, classical derivative rules applied term by term.
inline double xm_derivative(const XmLaguerreSpec& spec, int n, double z) {
    return xm_laguerre_jet(spec, n, z).d1;
}
inline double xm_derivative(const XmJacobiSpec& spec, int n, double z) {
    return xm_jacobi_jet(spec, n, z).d1;
}

/// Ascending monomial coefficients of P_m^{(a,b)}(z), by expanding the
/// defining series with small convolutions.
inline std::vector<double> jacobi_coefficients(int m, double a, double b) {
    detail::require_xm(m, 0);
    auto convolve = [](const std::vector<double>& p, double c0, double c1) {
        std::vector<double> out(p.size() + 1, 0.0);
        for (size_t i = 0; i < p.size(); ++i) {
            out[i] += c0 * p[i];
            out[i + 1] += c1 * p[i];
        }
        return out;
    };
    std::vector<double> total(m + 1, 0.0);
    for (int k = 0; k <= m; ++k) {
        std::vector<double> term{1.0};
        for (int i = 0; i < k; ++i) term = convolve(term, -0.5, 0.5);
        for (int i = 0; i < m - k; ++i) term = convolve(term, 0.5, 0.5);
        const double c = specialfn::binomial_product(m + a, m - k) *
                         specialfn::binomial_product(m + b, k);
        for (size_t j = 0; j < term.size(); ++j) total[j] += c * term[j];
    }
    return total;
}

/// Ascending monomial coefficients of L_m^{(alpha)}(-z) as a polynomial in z.
inline std::vector<double> laguerre_neg_coefficients(int m, double alpha) {
    detail::require_xm(m, 0);
    std::vector<double> c(m + 1, 0.0);
    double inv_fact = 1.0;
    for (int k = 0; k <= m; ++k) {
        c[k] = specialfn::binomial_product(m + alpha, m - k) * inv_fact;
        inv_fact /= (k + 1);
    }
    return c;
}

/// Cauchy bound on the magnitude of every real root: 1 + max |c_i / c_top|,
/// with the effective top coefficient the highest one that is not
/// negligible. Zero for (near-)constant polynomials.
inline double cauchy_root_bound(const std::vector<double>& coeff) {
    double largest = 0.0;
    for (double c : coeff) largest = std::max(largest, std::abs(c));
    if (!(largest > 0.0)) return 0.0;
    int top = 0;
    for (int i = static_cast<int>(coeff.size()) - 1; i >= 0; --i) {
        if (std::abs(coeff[i]) > 1e-12 * largest) {
            top = i;
            break;
        }
    }
    if (top == 0) return 0.0;
    double bound = 0.0;
    for (int i = 0; i < top; ++i)
        bound = std::max(bound, std::abs(coeff[i] / coeff[top]));
    return 1.0 + bound;
}

/// True iff the sampled denominator has no sign change between consecutive
/// nodes and no |value| below 1e-12 anywhere on the grid. At 4096 nodes the
/// low-degree denominators cannot oscillate between samples.
inline bool denominator_nonzero_scan(const std::function<double(double)>& denominator,
                                     const Grid& grid) {
    constexpr double kTiny = 1e-12;
    double prev = denominator(grid.node(0));
    if (!std::isfinite(prev) || std::abs(prev) < kTiny) return false;
    for (int i = 1; i < grid.count; ++i) {
        const double v = denominator(grid.node(i));
        if (!std::isfinite(v) || std::abs(v) < kTiny) return false;
        if ((v > 0.0) != (prev > 0.0)) return false;
        prev = v;
    }
    return true;
}

} // namespace direop::xortho
