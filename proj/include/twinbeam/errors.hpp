#ifndef TWINBEAM_ERRORS_HPP
#define TWINBEAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twinbeam {

// An iterative numerical routine failed to reach its tolerance.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// A truncated Fock-space computation leaked too much population.
struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested inputs admit no solution (e.g. no transmission reproduces the
// measured probe output for the given gain).
struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace twinbeam

#endif
