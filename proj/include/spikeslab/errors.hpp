#pragma once

#include <stdexcept>

namespace spikeslab {

/// An argument or configuration value outside its documented domain.
struct parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Non-finite inputs or a failed matrix factorization.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Data that cannot support the requested computation (e.g. a constant response).
struct degenerate_data_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Request beyond a hard problem-size cap; the caller must shrink the problem.
struct capability_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed input file; the message carries the row/column location.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Filesystem failure while reading or writing a report.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace spikeslab
