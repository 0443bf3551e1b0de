#pragma once

#include <stdexcept>
#include <string>

#include "pinj/numbers.hpp"

namespace pinj {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// element construction
struct PointOutOfRange : Error {
  using Error::Error;
};
struct DuplicateDomainPoint : Error {
  using Error::Error;
};
struct DuplicateImagePoint : Error {
  using Error::Error;
};
struct SizeMismatch : Error {
  using Error::Error;
};

// chart notation
struct SyntaxError : Error {
  using Error::Error;
};
struct MissingPoint : Error {
  using Error::Error;
};
struct RepeatedPoint : Error {
  using Error::Error;
};

// marked-element maps
struct NotNilpotent : Error {
  using Error::Error;
};
struct InvalidMark : Error {
  using Error::Error;
};

// enumeration / brute force
struct BudgetExceeded : Error {
  BudgetExceeded(const std::string& what, BigInt required_count)
      : Error(what), required(std::move(required_count)) {}
  BigInt required;  // exact number of elements/tuples the request needs
};

struct MultiplicityOutOfRange : Error {
  using Error::Error;
};

}  // namespace pinj
