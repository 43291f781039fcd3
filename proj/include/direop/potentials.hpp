#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "direop/errors.hpp"
#include "direop/grid.hpp"
#include "direop/jet.hpp"
#include "direop/specialfn.hpp"
#include "direop/xortho.hpp"

namespace direop {

enum class Family { radial_oscillator, trig_scarf, hyp_poschl_teller };

struct OscillatorParams {
    double omega = 0.0;  // frequency, > 0
    double ell = 0.0;    // angular parameter, > 0
};

struct ShapeParams {
    double A = 0.0;
    double B = 0.0;
};

/// One fully parameterized scalar-potential selection: the family, the
/// codimension m of the rational extension (0 = conventional), whether the
/// parametric transformation B <-> A -/+ 1/2 is applied, and the physical
/// parameters. Every operation in the library takes one of these.
struct PotentialSpec {
    Family family = Family::radial_oscillator;
    int m = 0;
    bool parametric = false;
    OscillatorParams osc{};
    ShapeParams shape{};

    static PotentialSpec radial_oscillator(double omega, double ell, int m = 0) {
        PotentialSpec s;
        s.family = Family::radial_oscillator;
        s.m = m;
        s.osc = {omega, ell};
        return s;
    }
    static PotentialSpec trig_scarf(double A, double B, int m = 0, bool parametric = false) {
        PotentialSpec s;
        s.family = Family::trig_scarf;
        s.m = m;
        s.parametric = parametric;
        s.shape = {A, B};
        return s;
    }
    static PotentialSpec hyp_poschl_teller(double A, double B, int m = 0, bool parametric = false) {
        PotentialSpec s;
        s.family = Family::hyp_poschl_teller;
        s.m = m;
        s.parametric = parametric;
        s.shape = {A, B};
        return s;
    }
};

/// Physical domain after numerical truncation. Half-line families carry a
/// right truncation radius; the Scarf interval is inset a fixed hair from its
/// singular endpoints and needs no truncation marker.
struct DomainInfo {
    double x_min = 0.0;
    double x_max = 0.0;
    bool open_left = true;
    bool open_right = true;
    bool right_truncated = false;
    double truncated_at = 0.0;
};

/// The Jacobi indices attached to a Scarf or Poschl-Teller potential:
/// (alpha, beta) built from the potential's own A, B, plus the
/// parametric-partner pairs (gamma, delta) = (B-A+1/2, A+B-1/2) and
/// (eta, zeta) = (A-B+1/2, -A-B-1/2).
struct JacobiIndices {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    double eta = 0.0;
    double zeta = 0.0;
};

/// The parametric variants are evaluated by substituting parameters in the
/// non-parametric closed forms: Scarf A -> B+1/2, B -> A-1/2 and
/// Poschl-Teller A -> B-1/2, B -> A+1/2.
inline ShapeParams effective_shape(const PotentialSpec& spec) {
    if (!spec.parametric) return spec.shape;
    if (spec.family == Family::trig_scarf)
        return {spec.shape.B + 0.5, spec.shape.A - 0.5};
    return {spec.shape.B - 0.5, spec.shape.A + 0.5};
}

inline JacobiIndices jacobi_indices(const PotentialSpec& spec) {
    if (spec.family == Family::radial_oscillator)
        throw std::invalid_argument("jacobi_indices: the radial oscillator uses Laguerre indices");
    const double A = spec.shape.A;
    const double B = spec.shape.B;
    JacobiIndices idx;
    if (spec.family == Family::trig_scarf) {
        idx.alpha = A - B - 0.5;
        idx.beta = A + B - 0.5;
    } else {
        idx.alpha = -A + B - 0.5;
        idx.beta = -A - B - 0.5;
    }
    idx.gamma = B - A + 0.5;
    idx.delta = A + B - 0.5;
    idx.eta = A - B + 0.5;
    idx.zeta = -A - B - 0.5;
    return idx;
}

/// (alpha, beta) pair that enters every closed form, i.e. the indices of the
/// effective (possibly substituted) parameters.
inline std::pair<double, double> effective_jacobi_pair(const PotentialSpec& spec) {
    const ShapeParams p = effective_shape(spec);
    if (spec.family == Family::trig_scarf)
        return {p.A - p.B - 0.5, p.A + p.B - 0.5};
    return {-p.A + p.B - 0.5, -p.A - p.B - 0.5};
}

inline double laguerre_index(const PotentialSpec& spec) { return spec.osc.ell + 0.5; }

namespace detail {

// Scan cap for the half-line families; generous enough that any admissible
// bound state has decayed below 1e-12 of its peak well inside it.
constexpr double kHalfLineCap = 200.0;
constexpr double kScarfInset = 1e-6;

inline void check_in_domain(const PotentialSpec& spec, double x) {
    if (spec.family == Family::trig_scarf) {
        if (!(std::abs(x) < M_PI / 2.0))
            throw std::domain_error("x outside the open interval (-pi/2, pi/2)");
    } else {
        if (!(x > 0.0)) throw std::domain_error("x outside the open half line (0, inf)");
    }
}

inline Jet2 z_jet(const PotentialSpec& spec, double x) {
    switch (spec.family) {
        case Family::radial_oscillator: {
            const double om = spec.osc.omega;
            return {0.5 * om * x * x, om * x, om};
        }
        case Family::trig_scarf:
            return sin_jet(x);
        case Family::hyp_poschl_teller:
            return cosh_jet(x);
    }
    throw std::logic_error("unreachable family");
}

// Ratio whose negative log-derivative is the rational part of the scalar
// potential: numerator = ground-state numerator polynomial, denominator = the
// extension denominator. Valid for m >= 1.
inline Jet2 extension_ratio_jet(const PotentialSpec& spec, const Jet2& zj) {
    if (spec.family == Family::radial_oscillator) {
        const xortho::XmLaguerreSpec xs{spec.m, laguerre_index(spec)};
        const Jet2 num = specialfn::laguerre_neg_jet(spec.m, xs.alpha, zj.f);
        const Jet2 den = xortho::xm_laguerre_denominator_jet(xs, zj.f);
        return chain(num / den, zj);
    }
    const auto [a, b] = effective_jacobi_pair(spec);
    const Jet2 num = specialfn::jacobi_jet(spec.m, -2.0 - a, b, zj.f);
    const Jet2 den = specialfn::jacobi_jet(spec.m, -a - 1.0, b - 1.0, zj.f);
    return chain(num / den, zj);
}

} // namespace detail

/// phi(x) and its analytic x-derivative evaluated together.
struct PhiValue {
    double phi = 0.0;
    double dphi = 0.0;
};

/// Scalar potential phi = phi_conventional + phi_rational for the selected
/// variant. The rational part is the negative logarithmic derivative of
/// (ground-state numerator / extension denominator), which agrees with the
/// per-family rational closed forms identically.
inline PhiValue phi_eval(const PotentialSpec& spec, double x) {
    detail::check_in_domain(spec, x);
    PhiValue out;
    switch (spec.family) {
        case Family::radial_oscillator: {
            const double om = spec.osc.omega;
            const double el = spec.osc.ell;
            out.phi = 0.5 * om * x - (el + 1.0) / x;
            out.dphi = 0.5 * om + (el + 1.0) / (x * x);
            break;
        }
        case Family::trig_scarf: {
            const ShapeParams p = effective_shape(spec);
            const double sec = 1.0 / std::cos(x);
            const double tan = std::tan(x);
            out.phi = p.A * tan - p.B * sec;
            out.dphi = p.A * sec * sec - p.B * sec * tan;
            break;
        }
        case Family::hyp_poschl_teller: {
            const ShapeParams p = effective_shape(spec);
            const double csch = 1.0 / std::sinh(x);
            const double coth = std::cosh(x) * csch;
            out.phi = p.A * coth - p.B * csch;
            out.dphi = -p.A * csch * csch + p.B * csch * coth;
            break;
        }
    }
    if (spec.m >= 1) {
        const Jet2 u = detail::extension_ratio_jet(spec, detail::z_jet(spec, x));
        out.phi += -u.d1 / u.f;
        out.dphi += -(u.d2 * u.f - u.d1 * u.d1) / (u.f * u.f);
    }
    return out;
}

inline double phi(const PotentialSpec& spec, double x) { return phi_eval(spec, x).phi; }
inline double phi_prime(const PotentialSpec& spec, double x) { return phi_eval(spec, x).dphi; }

/// Family coordinate z(x) and dz/dx.
inline std::pair<double, double> map_z(const PotentialSpec& spec, double x) {
    detail::check_in_domain(spec, x);
    const Jet2 zj = detail::z_jet(spec, x);
    return {zj.f, zj.d1};
}

/// Partner Schroedinger potentials, always assembled from phi:
/// V1 = phi^2 - phi', V2 = phi^2 + phi'. The expanded per-family closed forms
/// are cross-checks only, never the evaluation route.
inline double potential_v(const PotentialSpec& spec, int which, double x) {
    if (which != 1 && which != 2) throw std::invalid_argument("potential_v: which must be 1 or 2");
    const PhiValue pv = phi_eval(spec, x);
    return which == 1 ? pv.phi * pv.phi - pv.dphi : pv.phi * pv.phi + pv.dphi;
}

/// Unnormalized zero-mode profile exp(-int phi): the conventional weight times
/// (ground-state numerator / extension denominator). Used to place the domain
/// truncation; for parameter sets with broken supersymmetry it grows instead
/// of decaying and the truncation cap applies.
inline double zero_mode_shape(const PotentialSpec& spec, double x) {
    detail::check_in_domain(spec, x);
    const Jet2 zj = detail::z_jet(spec, x);
    const double z = zj.f;
    double w = 0.0;
    switch (spec.family) {
        case Family::radial_oscillator:
            w = std::pow(x, spec.osc.ell + 1.0) * std::exp(-0.5 * z);
            break;
        case Family::trig_scarf: {
            const ShapeParams p = effective_shape(spec);
            w = std::pow(1.0 - z, 0.5 * (p.A - p.B)) * std::pow(1.0 + z, 0.5 * (p.A + p.B));
            break;
        }
        case Family::hyp_poschl_teller: {
            const ShapeParams p = effective_shape(spec);
            w = std::pow(z - 1.0, 0.5 * (p.B - p.A)) * std::pow(z + 1.0, -0.5 * (p.B + p.A));
            break;
        }
    }
    if (spec.m >= 1) w *= detail::extension_ratio_jet(spec, zj).f;
    return w;
}

/// Truncated domain: Scarf gets a fixed 1e-6 inset at both singular
/// endpoints; the half-line families are cut where the zero-mode profile has
/// fallen below tail_tol of its peak (scanned, so denominator dips cannot
/// fake an early tail).
inline DomainInfo truncate_domain(const PotentialSpec& spec, double tail_tol) {
    if (!(tail_tol > 0.0 && tail_tol <= 1e-6))
        throw std::invalid_argument("tail_tol must lie in (0, 1e-6]");
    if (spec.family == Family::trig_scarf) {
        DomainInfo d;
        d.x_min = -M_PI / 2.0 + detail::kScarfInset;
        d.x_max = M_PI / 2.0 - detail::kScarfInset;
        d.open_left = d.open_right = true;
        d.right_truncated = false;
        return d;
    }
    constexpr int kScanCount = 40000;
    const double step = detail::kHalfLineCap / kScanCount;
    double peak = 0.0;
    for (int i = 1; i <= kScanCount; ++i) {
        const double v = std::abs(zero_mode_shape(spec, i * step));
        if (std::isfinite(v) && v > peak) peak = v;
    }
    if (!(peak > 0.0))
        throw singular_extension_error("degenerate extension: zero-mode profile vanishes identically");
    int last_above = kScanCount;
    for (int i = kScanCount; i >= 1; --i) {
        const double v = std::abs(zero_mode_shape(spec, i * step));
        if (std::isfinite(v) && v >= tail_tol * peak) {
            last_above = i;
            break;
        }
    }
    DomainInfo d;
    d.x_min = 0.0;
    d.x_max = std::min(detail::kHalfLineCap, (last_above + 2) * step);
    d.open_left = true;
    d.open_right = false;
    d.right_truncated = true;
    d.truncated_at = d.x_max;
    return d;
}

namespace detail {

inline void reject(const std::string& inequality) {
    throw invalid_spec_error("parameter window violated: " + inequality);
}

// Both extension polynomials, the denominator and the ground-state
// numerator, must be root-free on the physical domain: the rational part of
// phi is the negative log-derivative of their ratio, so a root of either one
// is a pole. Half-line families are scanned uniformly in x, which resolves
// the coordinate near the origin quadratically finely, out to a radius that
// provably covers every real root (a Cauchy bound from the exact monomial
// coefficients certifies the tail).
inline void check_extension_polynomials(const PotentialSpec& spec) {
    auto scan_or_throw = [&](double lo, double hi, const std::function<double(double)>& f,
                             const char* what) {
        const Grid grid = make_grid(lo, hi, 8192);
        if (!xortho::denominator_nonzero_scan(f, grid))
            throw singular_extension_error(std::string("extension ") + what +
                                           " has a root inside the physical domain");
    };
    if (spec.family == Family::radial_oscillator) {
        const double om = spec.osc.omega;
        const xortho::XmLaguerreSpec xs{spec.m, laguerre_index(spec)};
        const double bound = std::max(
            {50.0, xortho::cauchy_root_bound(xortho::laguerre_neg_coefficients(spec.m, xs.alpha)),
             xortho::cauchy_root_bound(
                 xortho::laguerre_neg_coefficients(spec.m, xs.alpha - 1.0))});
        const double x_hi = std::sqrt(2.0 * 2.0 * bound / om);  // covers z up to 2*bound
        scan_or_throw(0.0, x_hi,
                      [&](double x) {
                          return xortho::xm_laguerre_denominator(xs, 0.5 * om * x * x);
                      },
                      "denominator");
        scan_or_throw(0.0, x_hi,
                      [&](double x) {
                          return specialfn::laguerre(spec.m, xs.alpha, -0.5 * om * x * x);
                      },
                      "ground-state numerator");
        return;
    }
    const std::pair<double, double> ab = effective_jacobi_pair(spec);
    const double a = ab.first;
    const double b = ab.second;
    const xortho::XmJacobiSpec xs{spec.m, a, b};
    if (spec.family == Family::trig_scarf) {
        scan_or_throw(-1.0, 1.0,
                      [&](double z) { return xortho::xm_jacobi_denominator(xs, z); },
                      "denominator");
        scan_or_throw(-1.0, 1.0,
                      [&](double z) { return specialfn::jacobi(spec.m, -2.0 - a, b, z); },
                      "ground-state numerator");
        return;
    }
    const double bound = std::max(
        {50.0, xortho::cauchy_root_bound(xortho::jacobi_coefficients(spec.m, -a - 1.0, b - 1.0)),
         xortho::cauchy_root_bound(xortho::jacobi_coefficients(spec.m, -2.0 - a, b))});
    const double x_hi = std::acosh(2.0 * bound);
    scan_or_throw(0.0, x_hi,
                  [&](double x) { return xortho::xm_jacobi_denominator(xs, std::cosh(x)); },
                  "denominator");
    scan_or_throw(0.0, x_hi,
                  [&](double x) { return specialfn::jacobi(spec.m, -2.0 - a, b, std::cosh(x)); },
                  "ground-state numerator");
}

} // namespace detail

/// Full admissibility check: the family's parameter window, the parametric
/// flag, and for m >= 1 the nonvanishing of the extension denominator and the
/// non-degeneracy of the extended ground state. Returns the truncated domain.
inline DomainInfo validate(const PotentialSpec& spec) {
    if (spec.m < 0) detail::reject("m >= 0");
    switch (spec.family) {
        case Family::radial_oscillator:
            if (spec.parametric)
                detail::reject("the radial oscillator admits no parametric transformation");
            if (!(spec.osc.omega > 0.0)) detail::reject("omega > 0");
            if (!(spec.osc.ell > 0.0)) detail::reject("ell > 0");
            break;
        case Family::trig_scarf: {
            const double A = spec.shape.A;
            const double B = spec.shape.B;
            if (!spec.parametric) {
                if (!(B > 0.0 && B < A - 1.0)) detail::reject("0 < B < A-1");
            } else {
                if (!(B > A - 1.0 && A - 1.0 > 0.0)) detail::reject("B > A-1 > 0");
            }
            break;
        }
        case Family::hyp_poschl_teller: {
            const double A = spec.shape.A;
            const double B = spec.shape.B;
            if (!spec.parametric) {
                if (!(B > A + 1.0 && A + 1.0 > 1.0)) detail::reject("B > A+1 > 1");
            } else {
                if (!(A + 1.0 > B && B > 0.0)) detail::reject("A+1 > B > 0");
            }
            break;
        }
    }
    if (spec.m >= 1) {
        if (spec.family != Family::radial_oscillator) {
            const auto [a, b] = effective_jacobi_pair(spec);
            (void)b;
            if (std::abs(1.0 + a - spec.m) < 1e-9)
                throw singular_extension_error(
                    "degenerate extension: ground-state numerator coefficient 1+alpha-m vanishes");
        }
        detail::check_extension_polynomials(spec);
    }
    return truncate_domain(spec, 1e-12);
}

} // namespace direop
