#pragma once

#include <stdexcept>

namespace luroth {

/// Input outside an operation's domain or a validation failure (CLI exit 1).
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Enumeration, iteration, digit or precision budget exhausted (CLI exit 2).
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace luroth
