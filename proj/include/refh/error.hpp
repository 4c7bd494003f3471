#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace refh {

/// Base class for data errors (bad input files, insufficient data). Maps to
/// CLI exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A row of an input file violated its schema or a corpus invariant.
class IngestError : public Error {
 public:
  IngestError(std::string file, std::size_t line, std::string field, const std::string& message)
      : Error(file + ":" + std::to_string(line) + (field.empty() ? "" : " [" + field + "]") + ": " +
              message),
        file_(std::move(file)),
        line_(line),
        field_(std::move(field)) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::string file_;
  std::size_t line_;
  std::string field_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Too few complete observations to compute a statistic.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

}  // namespace refh
