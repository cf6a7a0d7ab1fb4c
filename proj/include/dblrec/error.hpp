#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dblrec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file or inconsistent hand-made structure.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Two construction rules asked for different images of the same pair.
/// Always a compiler bug, never a property of the input machine.
class ConflictingRule : public Error {
 public:
  ConflictingRule(std::uint32_t a, std::uint32_t b, std::uint32_t first, std::uint32_t second)
      : Error("conflicting rule for pair (" + std::to_string(a) + "," + std::to_string(b) +
              "): " + std::to_string(first) + " vs " + std::to_string(second)),
        a(a), b(b), first(first), second(second) {}

  std::uint32_t a, b, first, second;
};

class SymmetryViolation : public Error {
 public:
  using Error::Error;
};

/// More than one cell of a local window carries a machine state.
class TwoHeads : public Error {
 public:
  using Error::Error;
};

class LevelMismatch : public Error {
 public:
  using Error::Error;
};

/// A symmetric-code window admits no consistent (or more than one) reading.
class PhaseError : public Error {
 public:
  using Error::Error;
};

class TagInconsistency : public Error {
 public:
  using Error::Error;
};

class NonPrimeModulus : public Error {
 public:
  using Error::Error;
};

class ModulusTooSmall : public Error {
 public:
  using Error::Error;
};

}  // namespace dblrec
