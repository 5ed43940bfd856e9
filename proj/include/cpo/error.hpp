#pragma once

#include <stdexcept>
#include <string>

namespace cpo {

/// Base of every error the library throws. All of them signal bad input;
/// negative mathematical verdicts are returned as values, never thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownCpo : public Error {
 public:
  explicit UnknownCpo(const std::string& name) : Error("unknown CPO: " + name) {}
};

class BadElement : public Error {
 public:
  using Error::Error;
};

class BadIndex : public Error {
 public:
  using Error::Error;
};

class BadDepth : public Error {
 public:
  using Error::Error;
};

class InvalidSegment : public Error {
 public:
  using Error::Error;
};

class InvalidString : public Error {
 public:
  using Error::Error;
};

class NotIsomorphic : public Error {
 public:
  using Error::Error;
};

class NotBoundary : public Error {
 public:
  using Error::Error;
};

}  // namespace cpo
