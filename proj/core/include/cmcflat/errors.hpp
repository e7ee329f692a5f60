#pragma once

#include <stdexcept>
#include <string>

namespace cmcflat {

// Base of every error thrown by the library. The CLI maps all of these to
// exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter lies outside the closed/open range an operation accepts. The
// message names the violated bound.
class DomainError : public Error {
 public:
  using Error::Error;
};

// MiyataData failed one of its structural or numeric conditions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The input has a shape the operation does not handle (e.g. m != 1).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// An exact decision was requested on data that carries no exact form.
class ExactnessError : public Error {
 public:
  using Error::Error;
};

class ConstructionError : public Error {
 public:
  using Error::Error;
};

class DegenerateError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cmcflat
