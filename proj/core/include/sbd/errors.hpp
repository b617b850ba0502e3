#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace sbd {

/// Base class of everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix shapes do not line up (wrong sizes, indivisible vector length, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A block spec is dimensionally inconsistent with its generator set:
/// the multiplicity-weighted block dimensions do not sum to the ambient
/// dimension, or per-family generator counts do not match.
class SpecDimensionError : public Error {
 public:
  using Error::Error;
};

/// Generator labels of two inputs that must pair up do not agree.
class SpecMismatchError : public Error {
 public:
  using Error::Error;
};

/// An input matrix that must be unitary is not, within tolerance.
class NonUnitaryInput : public Error {
 public:
  using Error::Error;
};

/// The common kernel of a block family has a different dimension than the
/// declared multiplicity. Signals an inconsistent block spec: a wrong
/// multiplicity, a degenerate copy given in a twisted basis, or blocks that
/// are equivalent to no invariant subspace of the generators at all.
class KernelDimensionMismatch : public Error {
 public:
  KernelDimensionMismatch(std::size_t family, Eigen::Index expected,
                          Eigen::Index observed)
      : Error("family " + std::to_string(family) +
              ": expected kernel dimension " + std::to_string(expected) +
              ", observed " + std::to_string(observed)),
        family_(family),
        expected_(expected),
        observed_(observed) {}

  std::size_t family() const { return family_; }
  Eigen::Index expected() const { return expected_; }
  Eigen::Index observed() const { return observed_; }

 private:
  std::size_t family_;
  Eigen::Index expected_;
  Eigen::Index observed_;
};

/// A multiplication table violates the group axioms (Latin-square property,
/// identity, or associativity).
class CayleyValidationError : public Error {
 public:
  using Error::Error;
};

/// A label was requested that the table does not contain.
class UnknownLabelError : public Error {
 public:
  using Error::Error;
};

/// Character data is internally inconsistent (dimension row, class sizes,
/// or a multiplicity that does not come out as an integer).
class CharacterDataError : public Error {
 public:
  using Error::Error;
};

/// An input file violates the documented schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sbd
