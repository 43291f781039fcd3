#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "direop/errors.hpp"
#include "direop/grid.hpp"
#include "direop/potentials.hpp"

namespace direop {

/// Symmetric tridiagonal operator; the discretized Schroedinger Hamiltonian.
struct TridiagonalOperator {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;  // length size()-1

    int size() const { return static_cast<int>(diagonal.size()); }
};

/// Standard 3-point Laplacian (2/h^2 on the diagonal, -1/h^2 off) plus the
/// partner potential sampled at the nodes. Dirichlet conditions are implied
/// at the ghost endpoints one spacing outside the grid.
inline TridiagonalOperator build_hamiltonian(const PotentialSpec& spec, int which,
                                             const Grid& grid) {
    TridiagonalOperator op;
    op.diagonal.resize(grid.count);
    op.off_diagonal.assign(grid.count - 1, -1.0 / (grid.h * grid.h));
    const double two_h2 = 2.0 / (grid.h * grid.h);
    for (int i = 0; i < grid.count; ++i) {
        const double v = potential_v(spec, which, grid.node(i));
        if (!std::isfinite(v))
            throw numeric_error("potential is not finite at a grid node");
        op.diagonal[i] = two_h2 + v;
    }
    return op;
}

namespace detail {

/// Number of eigenvalues of op strictly below x (Sturm sequence of LDL^T pivots).
inline int sturm_count_below(const TridiagonalOperator& op, double x) {
    const int n = op.size();
    int count = 0;
    double q = op.diagonal[0] - x;
    if (q < 0.0) ++count;
    for (int i = 1; i < n; ++i) {
        const double e = op.off_diagonal[i - 1];
        if (q == 0.0) q = std::numeric_limits<double>::min();
        q = op.diagonal[i] - x - e * e / q;
        if (q < 0.0) ++count;
    }
    return count;
}

inline std::pair<double, double> gershgorin_bounds(const TridiagonalOperator& op) {
    const int n = op.size();
    double lo = std::numeric_limits<double>::max();
    double hi = std::numeric_limits<double>::lowest();
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(op.off_diagonal[i - 1]);
        if (i + 1 < n) r += std::abs(op.off_diagonal[i]);
        lo = std::min(lo, op.diagonal[i] - r);
        hi = std::max(hi, op.diagonal[i] + r);
    }
    return {lo, hi};
}

/// Solve (op - lambda I) w = b by Gaussian elimination with partial pivoting
/// over the three bands; a row swap introduces a second superdiagonal.
inline std::vector<double> shifted_solve(const TridiagonalOperator& op, double lambda,
                                         std::vector<double> b) {
    const int n = op.size();
    constexpr double tiny = 1e-300;
    std::vector<double> d0(n), du(n, 0.0), du2(n, 0.0);
    for (int i = 0; i < n; ++i) d0[i] = op.diagonal[i] - lambda;
    for (int i = 0; i + 1 < n; ++i) du[i] = op.off_diagonal[i];
    for (int i = 0; i + 1 < n; ++i) {
        const double sub = op.off_diagonal[i];  // entry (i+1, i) before elimination
        if (std::abs(d0[i]) >= std::abs(sub)) {
            if (d0[i] == 0.0) d0[i] = tiny;
            const double fact = sub / d0[i];
            d0[i + 1] -= fact * du[i];
            b[i + 1] -= fact * b[i];
        } else {
            const double fact = d0[i] / sub;
            const double old_d1 = d0[i + 1];
            const double old_du1 = (i + 2 < n) ? du[i + 1] : 0.0;
            d0[i] = sub;
            d0[i + 1] = du[i] - fact * old_d1;
            du[i] = old_d1;
            du2[i] = old_du1;
            if (i + 2 < n) du[i + 1] = -fact * old_du1;
            std::swap(b[i], b[i + 1]);
            b[i + 1] -= fact * b[i];
        }
    }
    std::vector<double> w(n);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        if (i + 1 < n) s -= du[i] * w[i + 1];
        if (i + 2 < n) s -= du2[i] * w[i + 2];
        if (d0[i] == 0.0) d0[i] = tiny;
        w[i] = s / d0[i];
    }
    return w;
}

inline double norm2(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

inline void apply(const TridiagonalOperator& op, std::span<const double> v,
                  std::span<double> out) {
    const int n = op.size();
    for (int i = 0; i < n; ++i) {
        double s = op.diagonal[i] * v[i];
        if (i > 0) s += op.off_diagonal[i - 1] * v[i - 1];
        if (i + 1 < n) s += op.off_diagonal[i] * v[i + 1];
        out[i] = s;
    }
}

} // namespace detail

/// k smallest eigenvalues by Sturm-sequence bisection, each bracketed to a
/// relative interval width of 1e-12. Returned strictly increasing.
inline std::vector<double> eigenvalues_lowest(const TridiagonalOperator& op, int k) {
    if (k < 0 || k > op.size())
        throw std::invalid_argument("eigenvalues_lowest: k must lie in [0, size]");
    const auto [glo, ghi] = detail::gershgorin_bounds(op);
    std::vector<double> out;
    out.reserve(k);
    double lo_start = glo;
    for (int j = 1; j <= k; ++j) {
        double lo = lo_start;
        double hi = ghi;
        while (hi - lo > 1e-12 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)))) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (detail::sturm_count_below(op, mid) >= j)
                hi = mid;
            else
                lo = mid;
        }
        out.push_back(0.5 * (lo + hi));
        lo_start = lo;  // eigenvalue j+1 cannot lie below the bracket of j
    }
    return out;
}

/// Eigenvector by inverse iteration from a seeded random start; unit 2-norm,
/// sign fixed so the first extremum is positive. Two sweeps normally
/// suffice; more than eight means the eigenvalue cluster is too tight.
inline std::vector<double> eigenvector(const TridiagonalOperator& op, double lambda,
                                       std::uint64_t seed = 42) {
    const int n = op.size();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = gauss(rng);
    double nv = detail::norm2(v);
    for (double& x : v) x /= nv;

    double op_scale = 0.0;
    for (int i = 0; i < n; ++i) op_scale = std::max(op_scale, std::abs(op.diagonal[i]));
    const double tol = std::max(1e-10, 16.0 * std::numeric_limits<double>::epsilon() * op_scale);

    std::vector<double> t(n);
    bool converged = false;
    for (int sweep = 1; sweep <= 8; ++sweep) {
        v = detail::shifted_solve(op, lambda, std::move(v));
        nv = detail::norm2(v);
        if (!(nv > 0.0) || !std::isfinite(nv))
            throw degenerate_cluster_error("inverse iteration produced a non-finite vector");
        for (double& x : v) x /= nv;
        if (sweep < 2) continue;
        detail::apply(op, v, t);
        double res = 0.0;
        for (int i = 0; i < n; ++i) {
            const double r = t[i] - lambda * v[i];
            res += r * r;
        }
        if (std::sqrt(res) <= tol) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw degenerate_cluster_error("inverse iteration did not converge in 8 sweeps");

    double amp = 0.0;
    for (double x : v) amp = std::max(amp, std::abs(x));
    for (int i = 0; i < n; ++i) {
        const double a = std::abs(v[i]);
        if (a < 1e-3 * amp) continue;
        const double next = (i + 1 < n) ? std::abs(v[i + 1]) : 0.0;
        if (a >= next) {
            if (v[i] < 0.0)
                for (double& x : v) x = -x;
            break;
        }
    }
    return v;
}

/// Composite Simpson over the full truncated interval, using the implied
/// Dirichlet zeros at the two ghost endpoints. An even interior count leaves
/// one odd segment at the right edge, integrated by the trapezoid rule.
inline double quadrature(std::span<const double> values, const Grid& grid) {
    const int count = grid.count;
    if (static_cast<int>(values.size()) != count)
        throw std::invalid_argument("quadrature: values must match the grid");
    if (count < 3) throw std::invalid_argument("quadrature: need at least 3 nodes");
    auto at = [&](int i) {  // padded sample i in [0, count+2)
        return (i == 0 || i == count + 1) ? 0.0 : values[i - 1];
    };
    const int pts = count + 2;
    const int simpson_pts = (pts % 2 == 1) ? pts : pts - 1;
    double s = at(0) + at(simpson_pts - 1);
    for (int i = 1; i < simpson_pts - 1; ++i) s += at(i) * ((i % 2 == 1) ? 4.0 : 2.0);
    double integral = s * grid.h / 3.0;
    if (simpson_pts != pts) integral += 0.5 * grid.h * (at(pts - 2) + at(pts - 1));
    if (!std::isfinite(integral)) throw numeric_error("quadrature produced a non-finite value");
    return integral;
}

/// Cancel the leading O(h^order) error from a coarse/fine pair.
inline double richardson(double e_h, double e_h2, int order) {
    if (order < 1) throw std::invalid_argument("richardson: order must be >= 1");
    const double p = std::pow(2.0, order);
    return (p * e_h2 - e_h) / (p - 1.0);
}

} // namespace direop
