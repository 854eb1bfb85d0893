#pragma once

#include <stdexcept>
#include <string>

namespace rbalg {

// Base for every error raised by the library; the CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands come from different model instances (or shapes).
class ModelMismatch : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold (non-unital model, bad constant term, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A Laurent computation needed exponents outside its configured window.
class WindowOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace rbalg
