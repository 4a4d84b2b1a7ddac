#pragma once

#include <stdexcept>
#include <string>

namespace implang {

// Base of every error thrown by the library. The CLI maps ValidationError to
// exit status 1 and ConfigError/IoError to exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (corpus, annotation, vocabulary or curve files).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Data that parsed but violates a contract (missing curve, marker collision,
// parity failure, empty split).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace implang
