#pragma once

#include <cmath>

namespace direop {

/// Value together with its first and second derivative with respect to one
/// scalar variable. Arithmetic on jets propagates derivatives exactly, so a
/// composite expression built from seeded factors carries analytic d/dx and
/// d2/dx2 with no finite differencing.
struct Jet2 {
    double f = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;

    static constexpr Jet2 variable(double x) { return {x, 1.0, 0.0}; }
    static constexpr Jet2 constant(double c) { return {c, 0.0, 0.0}; }
};

constexpr Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.f + b.f, a.d1 + b.d1, a.d2 + b.d2};
}
constexpr Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.f - b.f, a.d1 - b.d1, a.d2 - b.d2};
}
constexpr Jet2 operator-(const Jet2& a) { return {-a.f, -a.d1, -a.d2}; }

constexpr Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.f * b.f,
            a.d1 * b.f + a.f * b.d1,
            a.d2 * b.f + 2.0 * a.d1 * b.d1 + a.f * b.d2};
}

// Quotient via a = q*b: q' = (a' - q b')/b, q'' = (a'' - 2 q' b' - q b'')/b.
constexpr Jet2 operator/(const Jet2& a, const Jet2& b) {
    const double q = a.f / b.f;
    const double q1 = (a.d1 - q * b.d1) / b.f;
    const double q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) / b.f;
    return {q, q1, q2};
}

constexpr Jet2 operator+(const Jet2& a, double c) { return {a.f + c, a.d1, a.d2}; }
constexpr Jet2 operator+(double c, const Jet2& a) { return a + c; }
constexpr Jet2 operator-(const Jet2& a, double c) { return {a.f - c, a.d1, a.d2}; }
constexpr Jet2 operator-(double c, const Jet2& a) { return {c - a.f, -a.d1, -a.d2}; }
constexpr Jet2 operator*(const Jet2& a, double c) { return {a.f * c, a.d1 * c, a.d2 * c}; }
constexpr Jet2 operator*(double c, const Jet2& a) { return a * c; }
constexpr Jet2 operator/(const Jet2& a, double c) { return {a.f / c, a.d1 / c, a.d2 / c}; }
constexpr Jet2 operator/(double c, const Jet2& a) { return Jet2::constant(c) / a; }

/// g seeded in an inner variable u composed with u(x): standard chain rule
/// through second order.
constexpr Jet2 chain(const Jet2& g_of_u, const Jet2& u_of_x) {
    return {g_of_u.f,
            g_of_u.d1 * u_of_x.d1,
            g_of_u.d2 * u_of_x.d1 * u_of_x.d1 + g_of_u.d1 * u_of_x.d2};
}

inline Jet2 exp(const Jet2& a) {
    const double e = std::exp(a.f);
    return {e, e * a.d1, e * (a.d2 + a.d1 * a.d1)};
}

/// a^p for real p; requires a.f > 0.
inline Jet2 pow(const Jet2& a, double p) {
    const double f = std::pow(a.f, p);
    const double fm1 = std::pow(a.f, p - 1.0);
    const double fm2 = std::pow(a.f, p - 2.0);
    return {f, p * fm1 * a.d1, p * fm1 * a.d2 + p * (p - 1.0) * fm2 * a.d1 * a.d1};
}

inline Jet2 sin_jet(double x) { return {std::sin(x), std::cos(x), -std::sin(x)}; }
inline Jet2 cos_jet(double x) { return {std::cos(x), -std::sin(x), -std::cos(x)}; }
inline Jet2 sinh_jet(double x) { return {std::sinh(x), std::cosh(x), std::sinh(x)}; }
inline Jet2 cosh_jet(double x) { return {std::cosh(x), std::sinh(x), std::cosh(x)}; }

} // namespace direop
