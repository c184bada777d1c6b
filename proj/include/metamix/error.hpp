#pragma once

#include <stdexcept>
#include <string>

namespace metamix {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Vocabularies, masks or vectors are inconsistent with a task schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Invalid or missing configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. Carries the source name and 1-based line.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A metric is undefined for the given input (e.g. AUC with one class).
class MetricError : public Error {
 public:
  using Error::Error;
};

/// Training diverged or hit an unrecoverable state.
class TrainingError : public Error {
 public:
  using Error::Error;
};

}  // namespace metamix
