#pragma once

#include <stdexcept>
#include <string>

namespace netgram {

// Errors split in two: bad inputs (caller can fix the request) and numerical
// failures (the computation itself broke down).  The CLI maps the former to
// exit code 1 and the latter to exit code 2.

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_symmetric : config_error {
    using config_error::config_error;
};

struct dimension_mismatch : config_error {
    using config_error::config_error;
};

struct invalid_spec : config_error {
    using config_error::config_error;
};

struct invalid_gamma : config_error {
    using config_error::config_error;
};

struct invalid_pattern : config_error {
    using config_error::config_error;
};

struct unsupported : config_error {
    using config_error::config_error;
};

// Scaling by gamma failed to make the state matrix a contraction.
struct unstable : config_error {
    using config_error::config_error;
};

struct no_convergence : numerical_error {
    using numerical_error::numerical_error;
};

struct not_positive_definite : numerical_error {
    using numerical_error::numerical_error;
};

struct singular_matrix : numerical_error {
    using numerical_error::numerical_error;
};

} // namespace netgram
