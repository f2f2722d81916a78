#pragma once

#include <stdexcept>
#include <string>

namespace ekr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeMismatch : Error {
  using Error::Error;
};

// Raised when a group closure exceeds the element cap; signals the group is
// out of desk scale rather than silently degrading.
struct CapExceeded : Error {
  using Error::Error;
};

struct NotTransitive : Error {
  using Error::Error;
};

struct NotFrobenius : Error {
  using Error::Error;
};

struct InvalidConnectionSet : Error {
  using Error::Error;
};

struct NotDerangementClass : Error {
  using Error::Error;
};

struct NotNormal : Error {
  using Error::Error;
};

struct IntersectsConnectionSet : Error {
  using Error::Error;
};

struct InvalidSplitClass : Error {
  using Error::Error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

struct NumericAmbiguity : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace ekr
