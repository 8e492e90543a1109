#pragma once

#include <stdexcept>
#include <string>

namespace adeq {

/// A configured work limit was exceeded (refinement steps, symbol count,
/// polynomial degree, branch count, set size guard).
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string &msg) : std::runtime_error(msg) {}
};

/// A decision could not be made at the working p-adic precision.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Hensel preconditions, reported distinctly.
struct hensel_nonroot_error : std::domain_error {
    explicit hensel_nonroot_error(const std::string &msg) : std::domain_error(msg) {}
};
struct hensel_singular_error : std::domain_error {
    explicit hensel_singular_error(const std::string &msg) : std::domain_error(msg) {}
};

/// Malformed literal or file input; carries line/column when known.
struct parse_error : std::runtime_error {
    int line = 0, column = 0;
    parse_error(const std::string &msg, int line_ = 0, int column_ = 0)
        : std::runtime_error(line_ ? "line " + std::to_string(line_) + ", col " +
                                         std::to_string(column_) + ": " + msg
                                   : msg),
          line(line_),
          column(column_) {}
};

}  // namespace adeq
