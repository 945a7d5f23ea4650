#pragma once
// Error types shared across the library. The CLI maps them to exit codes.

#include <stdexcept>
#include <string>

namespace qk {

// Malformed or inconsistent input data (bad JSON field, broken group table,
// non-associative structure constants, ...). CLI exit code 2.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// A computation would allocate a matrix beyond the configured entry cap.
// CLI exit code 3.
class SizeCapError : public std::runtime_error {
 public:
  explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

// A precondition on an operation's arguments failed (degree out of range,
// non-equivariant map, infinite hom-set, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qk
