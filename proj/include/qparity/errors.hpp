#ifndef QPARITY_ERRORS_HPP
#define QPARITY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qparity {

// Invalid inputs, malformed files, schema/config violations. CLI exit code 2.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Degenerate spectrum where a requested quantity is ill-defined.
class degeneracy_error : public validation_error {
 public:
  explicit degeneracy_error(const std::string& what) : validation_error(what) {}
};

// Solver or fit failed to converge. CLI exit code 3.
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qparity

#endif
