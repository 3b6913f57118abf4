#pragma once

#include <stdexcept>
#include <string>

namespace qcnash {

/// Bad user input: malformed files, inconsistent sizes, unknown names.
class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

/// Request exceeds what this build can do (e.g. too many qubits for the
/// dense backend).
class capability_error : public std::runtime_error {
 public:
  explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qcnash
