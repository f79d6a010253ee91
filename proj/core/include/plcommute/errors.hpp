#pragma once

#include <stdexcept>
#include <string>

namespace plc {

/// Every checked failure in the library carries one of these kinds.
enum class Err {
  EmptyInput,
  DomainNotUnit,
  NonMonotoneX,
  OutOfRange,
  OutOfDomain,
  InfinitePreimage,
  InvalidT,
  PreconditionViolated,
  NotCommuting,
  TrivialPsi,
  LatticeMismatch,
  UnmatchedKink,
  NotHomeomorphism,
  NoCycleWithinCap,
  InvalidItinerary,
  ParamOutOfRange,
  DegenerateShape,
  SlopeAtZeroNotTwo,
  PositiveFixedPoint,
  NotIncreasingLeg,
  NotTentConjugate,
  ParseError,
  Internal,
};

inline const char* err_name(Err kind) {
  switch (kind) {
    case Err::EmptyInput: return "EmptyInput";
    case Err::DomainNotUnit: return "DomainNotUnit";
    case Err::NonMonotoneX: return "NonMonotoneX";
    case Err::OutOfRange: return "OutOfRange";
    case Err::OutOfDomain: return "OutOfDomain";
    case Err::InfinitePreimage: return "InfinitePreimage";
    case Err::InvalidT: return "InvalidT";
    case Err::PreconditionViolated: return "PreconditionViolated";
    case Err::NotCommuting: return "NotCommuting";
    case Err::TrivialPsi: return "TrivialPsi";
    case Err::LatticeMismatch: return "LatticeMismatch";
    case Err::UnmatchedKink: return "UnmatchedKink";
    case Err::NotHomeomorphism: return "NotHomeomorphism";
    case Err::NoCycleWithinCap: return "NoCycleWithinCap";
    case Err::InvalidItinerary: return "InvalidItinerary";
    case Err::ParamOutOfRange: return "ParamOutOfRange";
    case Err::DegenerateShape: return "DegenerateShape";
    case Err::SlopeAtZeroNotTwo: return "SlopeAtZeroNotTwo";
    case Err::PositiveFixedPoint: return "PositiveFixedPoint";
    case Err::NotIncreasingLeg: return "NotIncreasingLeg";
    case Err::NotTentConjugate: return "NotTentConjugate";
    case Err::ParseError: return "ParseError";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& message)
      : std::runtime_error(std::string(err_name(kind)) + ": " + message), kind_(kind) {}

  Err kind() const { return kind_; }

 private:
  Err kind_;
};

}  // namespace plc
