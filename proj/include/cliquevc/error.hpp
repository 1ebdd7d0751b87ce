#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliquevc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(what + " at line " + std::to_string(line)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// A configured cap (vertex count, clique count, search nodes) was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// The supplied set is not shattered in the way witness extraction requires.
class NotShattered : public Error {
 public:
  using Error::Error;
};

class ExtractionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace cliquevc
