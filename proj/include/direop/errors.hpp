#pragma once

#include <stdexcept>
#include <string>

namespace direop {

/// Parameter window violation; the message names the violated inequality.
class invalid_spec_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An extension denominator has a root (or the extension degenerates)
/// inside the physical domain, so the rational potential is singular there.
class singular_extension_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Level index outside the admissible 0..n_max range.
class level_range_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A SUSY ladder step was requested at non-positive factorization energy.
class factorization_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Degenerate polynomial parameters (a vanishing coefficient denominator).
class degenerate_parameter_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Inverse iteration failed to converge (eigenvalue cluster too tight).
class degenerate_cluster_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-finite value produced where a finite one is required.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested more spectrum levels than the discretization can provide.
class truncation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (should not happen for valid input).
class inconsistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace direop
