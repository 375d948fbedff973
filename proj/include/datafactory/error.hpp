#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace datafactory {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input with a location (file line, CSV row, config line).
class ParseError : public Error {
 public:
  ParseError(std::string where, std::size_t line, const std::string& reason)
      : Error(where + ":" + std::to_string(line) + ": " + reason),
        where_(std::move(where)),
        line_(line),
        reason_(reason) {}

  const std::string& where() const { return where_; }
  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string where_;
  std::size_t line_;
  std::string reason_;
};

}  // namespace datafactory
