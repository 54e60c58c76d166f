#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qseries {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division or inversion by a series whose lowest coefficient is not a unit.
class NonUnitLead : public Error {
 public:
  using Error::Error;
};

/// A coefficient was requested (or compared) above a series' validity bound.
class BeyondValidity : public Error {
 public:
  using Error::Error;
};

/// deflate() found a nonzero coefficient off the requested stride.
class OffStride : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected,
              const std::string& message);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// One of the asserted zero patterns of the huffing matrix failed.
class ZeroPatternViolation : public Error {
 public:
  using Error::Error;
};

class InsufficientRows : public Error {
 public:
  using Error::Error;
};

/// The brute-force oracle was asked for an index above its cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NonIntegralOffset : public Error {
 public:
  using Error::Error;
};

}  // namespace qseries
