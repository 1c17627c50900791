#pragma once

#include <stdexcept>

namespace hanoi {

// Base class for every error this library raises on purpose. The CLI maps
// subclasses onto its exit-code contract (usage=2, cap=3, internal=4).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation would allocate or scan more than the configured state cap.
struct CapExceeded : Error {
  using Error::Error;
};

struct InvalidLabel : Error {
  using Error::Error;
};
struct EmptyLabel : InvalidLabel {
  using InvalidLabel::InvalidLabel;
};
struct InvalidLetter : InvalidLabel {
  using InvalidLabel::InvalidLabel;
};

struct IllegalMove : Error {
  using Error::Error;
};

// The given state does not satisfy the subgraph mask it was used with.
struct MaskViolation : Error {
  using Error::Error;
};

struct Unreachable : Error {
  using Error::Error;
};
struct Unreached : Error {
  using Error::Error;
};
struct NotUnique : Error {
  using Error::Error;
};

struct NoSparePeg : Error {
  using Error::Error;
};
struct InvalidSplit : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};
struct BadMagic : IoError {
  using IoError::IoError;
};
struct VersionMismatch : IoError {
  using IoError::IoError;
};
struct TruncatedFile : IoError {
  using IoError::IoError;
};

}  // namespace hanoi
