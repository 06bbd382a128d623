#pragma once

#include <stdexcept>
#include <string>

namespace ilhv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad labels, duplicate edges, parse failures.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but does not satisfy an operation's precondition
/// (for example an uncertified base set handed to the inflation pipeline).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exact search would exceed the configured enumeration budget.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace ilhv
