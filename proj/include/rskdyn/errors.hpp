#pragma once

#include <stdexcept>
#include <string>

namespace rskdyn {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (permutation, partition or tableau strings).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A value violates the invariants of its type.
class InvalidValue : public Error {
 public:
  using Error::Error;
};

// A desk-scale guard was hit (enumeration or oracle size too large).
class BoundExceeded : public Error {
 public:
  BoundExceeded(const std::string& what, std::size_t size, std::size_t bound)
      : Error(what + ": size " + std::to_string(size) + " exceeds bound " +
              std::to_string(bound)) {}
};

class DuplicateEntry : public Error {
 public:
  explicit DuplicateEntry(int value)
      : Error("value " + std::to_string(value) +
              " is already present in the tableau") {}
};

class MalformedPair : public Error {
 public:
  using Error::Error;
};

class NoCycleWithinBound : public Error {
 public:
  using Error::Error;
};

class UnsupportedMap : public Error {
 public:
  using Error::Error;
};

}  // namespace rskdyn
