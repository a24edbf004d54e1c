#pragma once

#include <stdexcept>
#include <string>

namespace arithlat {

// Numeric values are part of the C ABI (see arithlat.h); append only.
enum class ErrorCode : int {
  InvalidInput = 1,
  RankDeficient = 2,
  DimensionMismatch = 3,
  FieldMismatch = 4,
  AlgebraMismatch = 5,
  NotInvertible = 6,
  InvalidPlace = 7,
  SquareParameter = 8,
  NotUnimodular = 9,
  NotNormOne = 10,
  NonSquare = 11,
  NonFunctorial = 12,
  WeightAbsent = 13,
  DependentSpan = 14,
  ZeroVector = 15,
  NotInvariant = 16,
  NotGaloisStable = 17,
  DescentDegenerate = 18,
  OddDegree = 19,
  InsufficientUnits = 20,
  NoStabilization = 21,
  NotDivision = 22,
  NotSplitAtInfinity = 23,
  EvenDimension = 24,
  OddMultiplicityOfEven = 25,
  WitnessNotRational = 26,
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(error_name(code)) + ": " + what);
}

}  // namespace arithlat
