#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace precedent {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A factor, dimension, case or query name that is not declared.
class UnknownNameError : public Error {
 public:
  using Error::Error;
};

class InvalidHierarchyError : public Error {
 public:
  using Error::Error;
};

// A precedent that is not defined on every factor or dimension.
class IncompleteCaseError : public Error {
 public:
  using Error::Error;
};

// A value outside the value set of its dimension.
class ValueError : public Error {
 public:
  using Error::Error;
};

// The requested evaluator does not apply to the given input shape.
class ModelError : public Error {
 public:
  using Error::Error;
};

class CapExceededError : public Error {
 public:
  CapExceededError(std::size_t required, std::size_t cap)
      : Error("enumeration needs 2^" + std::to_string(required) +
              " situations but the cap is 2^" + std::to_string(cap)),
        required_(required),
        cap_(cap) {}

  std::size_t required() const { return required_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t required_;
  std::size_t cap_;
};

}  // namespace precedent
