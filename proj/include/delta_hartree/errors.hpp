#pragma once

#include <stdexcept>
#include <string>

namespace delta_hartree {

/// Raised when an operation is requested outside its admissible exponent
/// regime (e.g. minimizing at the mass-critical exponent). The CLI maps
/// this to its own exit code, distinct from I/O failures.
class regime_error : public std::runtime_error {
public:
    explicit regime_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a solver run exhausts its iteration budget. Callers that
/// want the partial result should use the report's `converged` flag
/// instead of relying on this exception.
class no_convergence_error : public std::runtime_error {
public:
    explicit no_convergence_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace delta_hartree
