#pragma once

#include <stdexcept>
#include <string>

namespace durvote {

/// A required input file or directory does not exist. CLI exit code 2.
class MissingInputError : public std::runtime_error {
 public:
  explicit MissingInputError(const std::string& what)
      : std::runtime_error(what) {}
};

/// An artifact, config, or wire record does not match its schema.
/// CLI exit code 3.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

/// Remote predictor transport failed after all retries. CLI exit code 4.
class TransportError : public std::runtime_error {
 public:
  explicit TransportError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace durvote
