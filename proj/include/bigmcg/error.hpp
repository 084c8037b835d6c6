#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bigmcg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text that does not match a grammar; `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("at " + std::to_string(position) + ": " + what), position_(position), detail_(what) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace bigmcg
