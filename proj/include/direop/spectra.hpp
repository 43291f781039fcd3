#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "direop/errors.hpp"
#include "direop/numerics.hpp"
#include "direop/potentials.hpp"

namespace direop {

/// One bound state. `energy` is the factorization-convention eigenvalue
/// (lowest level exactly zero whenever a zero mode exists); the family's
/// customary closed form, which may carry a different additive constant, is
/// kept alongside as `energy_conventional`. Numeric fields are filled by the
/// verification layer.
struct LevelRecord {
    int n = 0;
    double energy = 0.0;
    double energy_conventional = 0.0;
    std::optional<double> norm_closed_form;
    std::string norm_reason;  // why the closed form is absent; empty if present
    double norm_numeric = std::numeric_limits<double>::quiet_NaN();
    double numeric = std::numeric_limits<double>::quiet_NaN();
    double abs_err = std::numeric_limits<double>::quiet_NaN();
};

enum class ZeroModeSide { h1, h2, none };

struct SusyClass {
    bool broken = false;
    ZeroModeSide zero_mode_side = ZeroModeSide::none;
};

/// Largest admissible level index, or nullopt for the unbounded families.
/// Poschl-Teller spectra terminate at the largest n strictly below the
/// effective A; a value of -1 means no bound state at all.
inline std::optional<int> max_level(const PotentialSpec& spec) {
    if (spec.family != Family::hyp_poschl_teller) return std::nullopt;
    const double a_eff = effective_shape(spec).A;
    return static_cast<int>(std::ceil(a_eff)) - 1;
}

namespace detail {

inline void check_level(const PotentialSpec& spec, int n) {
    if (n < 0) throw level_range_error("level index must be >= 0");
    if (const auto nm = max_level(spec); nm && n > *nm)
        throw level_range_error("level " + std::to_string(n) + " above n_max = " +
                                std::to_string(*nm));
}

} // namespace detail

/// The family's customary closed-form eigenvalue. The conventional oscillator
/// carries the additive constant omega(ell + 3/2); its rational extensions do
/// not, and the parametric variants carry their own constants. The two
/// conventions are reconciled by offset fitting in the verification layer.
inline double energy_conventional(const PotentialSpec& spec, int n) {
    detail::check_level(spec, n);
    switch (spec.family) {
        case Family::radial_oscillator: {
            const double om = spec.osc.omega;
            if (spec.m == 0) return om * (2.0 * n + spec.osc.ell + 1.5);
            return 2.0 * n * om;
        }
        case Family::trig_scarf: {
            const double A = spec.shape.A;
            const double B = spec.shape.B;
            if (!spec.parametric) return (A + n) * (A + n) - A * A;
            return (B + n + 0.5) * (B + n + 0.5);
        }
        case Family::hyp_poschl_teller: {
            const double A = spec.shape.A;
            const double B = spec.shape.B;
            if (!spec.parametric) return A * A - (A - n) * (A - n);
            return -(B - n - 0.5) * (B - n - 0.5);
        }
    }
    throw std::logic_error("unreachable family");
}

/// Factorization-convention eigenvalue: the customary closed form shifted so
/// the lowest level sits at exactly zero whenever the spectrum is nonempty.
inline double energy(const PotentialSpec& spec, int n) {
    detail::check_level(spec, n);
    const auto nm = max_level(spec);
    const double shift = (!nm || *nm >= 0) ? energy_conventional(spec, 0) : 0.0;
    return energy_conventional(spec, n) - shift;
}

/// Unnormalized eigenfunction of H1 with its first two x-derivatives:
/// (weight) * (classical or exceptional polynomial) / (extension denominator).
inline Jet2 eigenfunction_jet(const PotentialSpec& spec, int n, double x) {
    detail::check_level(spec, n);
    detail::check_in_domain(spec, x);
    const Jet2 zj = detail::z_jet(spec, x);
    Jet2 weight;
    Jet2 numerator;
    Jet2 denominator = Jet2::constant(1.0);
    if (spec.family == Family::radial_oscillator) {
        const double el = spec.osc.ell;
        weight = pow(Jet2::variable(x), el + 1.0) * exp(-0.5 * zj);
        const xortho::XmLaguerreSpec xs{spec.m, laguerre_index(spec)};
        if (spec.m == 0) {
            numerator = chain(specialfn::laguerre_jet(n, xs.alpha, zj.f), zj);
        } else {
            numerator = chain(xortho::xm_laguerre_jet(xs, n, zj.f), zj);
            denominator = chain(xortho::xm_laguerre_denominator_jet(xs, zj.f), zj);
        }
    } else {
        const ShapeParams p = effective_shape(spec);
        const auto [a, b] = effective_jacobi_pair(spec);
        if (spec.family == Family::trig_scarf) {
            weight = pow(1.0 - zj, 0.5 * (p.A - p.B)) * pow(1.0 + zj, 0.5 * (p.A + p.B));
        } else {
            weight = pow(zj - 1.0, 0.5 * (p.B - p.A)) * pow(zj + 1.0, -0.5 * (p.B + p.A));
        }
        const xortho::XmJacobiSpec xs{spec.m, a, b};
        if (spec.m == 0) {
            numerator = chain(specialfn::jacobi_jet(n, a, b, zj.f), zj);
        } else {
            numerator = chain(xortho::xm_jacobi_jet(xs, n, zj.f), zj);
            denominator = chain(xortho::xm_jacobi_denominator_jet(xs, zj.f), zj);
        }
    }
    return weight * numerator / denominator;
}

inline double eigenfunction(const PotentialSpec& spec, int n, double x) {
    return eigenfunction_jet(spec, n, x).f;
}
inline double eigenfunction_deriv(const PotentialSpec& spec, int n, double x) {
    return eigenfunction_jet(spec, n, x).d1;
}

/// Closed-form normalization constant of the unnormalized eigenfunction, when
/// the family's formula is evaluable: every gamma argument must be positive
/// and the radicand nonnegative, otherwise the value is absent with a reason.
/// These constants are cross-checks only; quadrature normalization is
/// authoritative.
struct ClosedFormNorm {
    std::optional<double> value;
    std::string reason;
};

namespace detail {

struct NormGuard {
    bool ok = true;
    std::string reason;
    double log_sum = 0.0;

    void gamma_log(double arg, double sign_exponent) {
        if (!ok) return;
        if (arg <= 0.0) {
            ok = false;
            reason = "gamma argument <= 0";
            return;
        }
        log_sum += sign_exponent * specialfn::log_gamma(arg);
    }
    void factor(double v, double sign_exponent) {
        if (!ok) return;
        if (v <= 0.0) {
            ok = false;
            reason = "non-positive factor under the square root";
            return;
        }
        log_sum += sign_exponent * std::log(v);
    }
};

} // namespace detail

inline ClosedFormNorm norm_constant_closed_form(const PotentialSpec& spec, int n) {
    detail::check_level(spec, n);
    detail::NormGuard g;
    if (spec.family == Family::radial_oscillator) {
        const double om = spec.osc.omega;
        const double el = spec.osc.ell;
        g.gamma_log(n + 1.0, +1.0);                // n!
        g.factor(om, el + 1.5);
        g.factor(2.0, -(el + 0.5));
        g.factor(el + n + spec.m + 0.5, -1.0);
        g.gamma_log(el + n + 0.5, -1.0);
    } else {
        const auto [a, b] = effective_jacobi_pair(spec);
        if (spec.family == Family::trig_scarf) {
            if (spec.m == 0) {
                g.gamma_log(n + 1.0, +1.0);
                g.factor(a + b + 2.0 * n + 1.0, +1.0);
                g.gamma_log(n + a + b + 1.0, +1.0);
                g.factor(2.0, -(a + b + 1.0));
                g.factor(n + b, -1.0);
                g.gamma_log(n + a + 1.0, -1.0);
                g.gamma_log(n + b, -1.0);
            } else {
                g.gamma_log(n + 1.0, +1.0);
                g.factor(n + a + 1.0, +2.0);
                g.factor(a + b + 2.0 * n + 1.0, +1.0);
                g.gamma_log(n + a + b + 1.0, +1.0);
                g.factor(2.0, -(a + b + 1.0));
                g.factor(n + a - spec.m + 1.0, -1.0);
                g.factor(n + spec.m + b, -1.0);
                g.gamma_log(n + a + 2.0, -1.0);
                g.gamma_log(n + b, -1.0);
            }
        } else {
            if (spec.m == 0) {
                g.gamma_log(n + 1.0, +1.0);
                g.factor(-a - b - 2.0 * n - 1.0, +1.0);
                g.factor(n + a + 1.0, +2.0);
                g.gamma_log(-b - n, +1.0);
                g.factor(2.0, -(a + b + 1.0));
                g.factor(a + 1.0, -2.0);
                g.gamma_log(a + n + 1.0, -1.0);
                g.gamma_log(-a - b - n, -1.0);
            } else {
                g.gamma_log(n + 1.0, +1.0);
                g.factor(-a - b - 2.0 * n - 1.0, +1.0);
                g.factor(a + n + 1.0, +1.0);
                g.gamma_log(-b - n + 1.0, +1.0);
                g.factor(2.0, -(a + b + 1.0));
                g.factor(-b - n - 1.0, -1.0);
                g.factor(a * a, -1.0);
                g.gamma_log(a + n, -1.0);
                g.gamma_log(-a - b - n, -1.0);
                // degree-m families relate to the first extension by one ratio factor
                g.factor(n + a - spec.m + 1.0, +1.0);
                g.factor(a + n, -1.0);
            }
        }
    }
    if (!g.ok) return {std::nullopt, g.reason};
    return {std::exp(0.5 * g.log_sum), ""};
}

/// Quadrature normalization 1/sqrt(int psi^2); authoritative for every
/// downstream check.
inline double norm_constant_numeric(const PotentialSpec& spec, int n, const Grid& grid) {
    std::vector<double> sq(grid.count);
    for (int i = 0; i < grid.count; ++i) {
        const double v = eigenfunction(spec, n, grid.node(i));
        sq[i] = v * v;
    }
    const double integral = quadrature(sq, grid);
    if (!(integral > 0.0) || !std::isfinite(integral))
        throw numeric_error("eigenfunction norm integral is not positive and finite");
    return 1.0 / std::sqrt(integral);
}

/// Value and x-derivative of the H2 partner state built by one ladder step
/// from the (unnormalized) level-(n+1) eigenfunction:
/// (psi' + phi psi)/sqrt(E_{n+1}). Multiplying by the level-(n+1)
/// normalization constant makes it unit-norm (the ladder map is an isometry).
struct ValueDeriv {
    double f = 0.0;
    double d1 = 0.0;
};

inline ValueDeriv partner_unnormalized(const PotentialSpec& spec, int n, double x) {
    const double e_up = energy(spec, n + 1);
    if (!(e_up > 0.0))
        throw factorization_error("partner state needs a positive factorization energy");
    const double root = std::sqrt(e_up);
    const Jet2 psi = eigenfunction_jet(spec, n + 1, x);
    const PhiValue pv = phi_eval(spec, x);
    return {(psi.d1 + pv.phi * psi.f) / root,
            (psi.d2 + pv.dphi * psi.f + pv.phi * psi.d1) / root};
}

inline double partner_eigenfunction(const PotentialSpec& spec, int n, double x,
                                    const Grid& grid) {
    const double scale = norm_constant_numeric(spec, n + 1, grid);
    return scale * partner_unnormalized(spec, n, x).f;
}

/// Numeric SUSY-breaking classification: integrate phi along the grid and
/// test whether exp(-int phi) or exp(+int phi) is square integrable, judged
/// by whether the profile has decayed at both domain edges relative to its
/// peak. Exactly one normalizable profile means unbroken supersymmetry with
/// the zero mode on that side; none means broken.
inline SusyClass classify_susy(const PotentialSpec& spec, const Grid& grid) {
    std::vector<double> cumulative(grid.count, 0.0);
    double prev_phi = phi(spec, grid.node(0));
    for (int i = 1; i < grid.count; ++i) {
        const double cur = phi(spec, grid.node(i));
        cumulative[i] = cumulative[i - 1] + 0.5 * grid.h * (prev_phi + cur);
        prev_phi = cur;
    }
    auto normalizable = [&](double sign) {
        double smax = -std::numeric_limits<double>::infinity();
        for (double c : cumulative) smax = std::max(smax, sign * c);
        const double left = std::exp(2.0 * (sign * cumulative.front() - smax));
        const double right = std::exp(2.0 * (sign * cumulative.back() - smax));
        constexpr double edge_ratio = 1e-6;  // squared-amplitude decay demanded at the edges
        return left <= edge_ratio && right <= edge_ratio;
    };
    const bool minus_ok = normalizable(-1.0);  // exp(-int phi), the H1 candidate
    const bool plus_ok = normalizable(+1.0);   // exp(+int phi), the H2 candidate
    if (minus_ok && plus_ok)
        throw inconsistency_error("both zero-mode candidates appear normalizable");
    SusyClass out;
    out.broken = !minus_ok && !plus_ok;
    out.zero_mode_side =
        minus_ok ? ZeroModeSide::h1 : (plus_ok ? ZeroModeSide::h2 : ZeroModeSide::none);
    return out;
}

inline LevelRecord make_level_record(const PotentialSpec& spec, int n, const Grid& grid) {
    LevelRecord rec;
    rec.n = n;
    rec.energy = energy(spec, n);
    rec.energy_conventional = energy_conventional(spec, n);
    const ClosedFormNorm cf = norm_constant_closed_form(spec, n);
    rec.norm_closed_form = cf.value;
    rec.norm_reason = cf.reason;
    rec.norm_numeric = norm_constant_numeric(spec, n, grid);
    return rec;
}

} // namespace direop
