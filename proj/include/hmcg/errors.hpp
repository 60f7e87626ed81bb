#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hmcg {

// Base of everything the library throws on invalid input or exhausted limits.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class GenusError : public Error {
 public:
  using Error::Error;
};

// A free word, an integer entry or a word expansion outgrew a configured cap.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

// A constructed representation failed one of its defining relations.
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace hmcg
