#pragma once

#include <stdexcept>
#include <string>

namespace gaussq {

// Base for every error raised by the library. Exact arithmetic never
// overflows, so everything here is either a precondition violation or a
// reconstruction/verification outcome.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotExpandable : public Error {
 public:
  using Error::Error;
};

class InsufficientTruncation : public Error {
 public:
  using Error::Error;
};

class NonDissectibleResidue : public Error {
 public:
  using Error::Error;
};

class ReconstructionFailed : public Error {
 public:
  using Error::Error;
};

class FitFailed : public Error {
 public:
  using Error::Error;
};

class InvalidK : public Error {
 public:
  using Error::Error;
};

}  // namespace gaussq
