#pragma once

#include <stdexcept>
#include <string>

namespace ils {

/// Error taxonomy shared by the library and the CLI. category() is the
/// machine-readable tag the CLI prints on stderr.
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& what)
      : std::runtime_error(what), category_(std::move(category)) {}
  const std::string& category() const noexcept { return category_; }

 private:
  std::string category_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, long line = -1)
      : Error("parse", annotate(what, line)), line_(line) {}
  long line() const noexcept { return line_; }

 private:
  static std::string annotate(const std::string& what, long line) {
    if (line < 0) return what;
    return what + " (line " + std::to_string(line) + ")";
  }
  long line_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error("config", what) {}
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error("unsupported", what) {}
};

class SizeLimitError : public Error {
 public:
  explicit SizeLimitError(const std::string& what) : Error("size-limit", what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("io", what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error("validation", what) {}
};

}  // namespace ils
