// Error taxonomy. Domain failures are exceptions derived from toric::Error;
// the CLI maps them to exit code 1 with the failing stage named. Validation
// outcomes that callers are expected to branch on (Delzant reports,
// prequantization, half-form) are returned as values instead, see delzant.hpp.

#pragma once

#include <stdexcept>
#include <string>

namespace toric {

struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};

struct ZeroVector : Error {
  ZeroVector() : Error("zero vector has no primitive part") {}
};

struct NonSquare : Error {
  NonSquare() : Error("matrix is not square") {}
};

struct NotUnimodular : Error {
  explicit NotUnimodular(const std::string& m) : Error(m) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& m) : Error(m) {}
};

struct EmptySet : Error {
  explicit EmptySet(const std::string& m) : Error(m) {}
};

struct Unbounded : Error {
  explicit Unbounded(const std::string& m) : Error(m) {}
};

struct NotFullDimensional : Error {
  explicit NotFullDimensional(const std::string& m) : Error(m) {}
};

struct NotSimple : Error {
  explicit NotSimple(const std::string& m) : Error(m) {}
};

struct NotDelzant : Error {
  explicit NotDelzant(const std::string& m) : Error(m) {}
};

struct NotPrequantizable : Error {
  explicit NotPrequantizable(const std::string& m) : Error(m) {}
};

// construction_data and the oracle need offsets already integral
struct NotPrequantized : Error {
  explicit NotPrequantized(const std::string& m) : Error(m) {}
};

struct NoHalfForm : Error {
  explicit NoHalfForm(const std::string& m) : Error(m) {}
};

struct OutOfPolytope : Error {
  explicit OutOfPolytope(const std::string& m) : Error(m) {}
};

// oracle linear systems are determined by theory; a mismatch is a bug signal
struct InconsistentSystem : Error {
  explicit InconsistentSystem(const std::string& m) : Error(m) {}
};

struct HullDegenerate : Error {
  explicit HullDegenerate(const std::string& m) : Error(m) {}
};

struct RationalizationFailed : Error {
  explicit RationalizationFailed(const std::string& m) : Error(m) {}
};

struct SnapExceeded : Error {
  explicit SnapExceeded(const std::string& m) : Error(m) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error(m) {}
};

}  // namespace toric
