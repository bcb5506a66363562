#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sino/types.hpp"

namespace sino {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (CLI exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that does not allow the requested computation (CLI exit code 3).
class DataError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class CycleError : public Error {
 public:
  CycleError(std::string what, std::vector<NodeId> witness)
      : Error(std::move(what)), witness_(std::move(witness)) {}

  // Nodes of one directed cycle, in order; the last node links back to the first.
  const std::vector<NodeId>& witness() const noexcept { return witness_; }

 private:
  std::vector<NodeId> witness_;
};

}  // namespace sino
