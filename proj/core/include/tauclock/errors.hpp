// errors.hpp: error types shared across the library
//
// Precondition violations (bad parameter values, malformed specs) throw
// std::invalid_argument.  The types below cover the two failure modes that
// are not caller mistakes: unreadable/unwritable files and numerical
// routines that stop before reaching the requested accuracy.

#pragma once

#include <stdexcept>
#include <string>

namespace tauclock {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an adaptive routine exhausts its budget.  Carries the error
// estimate it reached and the one it was asked for so callers can decide
// whether the partial answer is still usable.
struct convergence_error : std::runtime_error {
  convergence_error(const std::string& what, double achieved, double requested)
      : std::runtime_error(what), achieved_error(achieved), requested_error(requested) {}

  double achieved_error;
  double requested_error;
};

}  // namespace tauclock
