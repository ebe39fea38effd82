#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace walkercount {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The truncated distribution never accumulates more than half its mass, so no
/// median exists below t_max.
class TailCensored : public Error {
 public:
  using Error::Error;
};

/// Too few quiet-interval samples, or too few usable scales, to form an estimate.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

class TooFewScales : public InsufficientData {
 public:
  using InsufficientData::InsufficientData;
};

/// A scale's median lies beyond the observed horizon.
class HorizonExceeded : public Error {
 public:
  using Error::Error;
};

class StepBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace walkercount
