#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pairspec {

/// Dense element index into a finite carrier.
using Elem = std::uint32_t;

enum class ErrorCode {
  // structure
  BadTable,
  NonCommutativeAdd,
  NonAssociativeAdd,
  ZeroNotNeutral,
  ZeroNotAbsorbing,
  // pair
  OneNotUnit,
  TNotClosed,
  TNotCentral,
  A0NotSubmodule,
  NonUniqueE,
  NoPropertyN,
  // negation maps
  NotAPermutation,
  NotOrderTwo,
  NotAdditive,
  QuasiNegationFails,
  TNotPreserved,
  A0NotPreserved,
  NotTCompatible,
  // constructions
  NuNotHomomorphism,
  OrderNotTotal,
  BadBound,
  NotACongruence,
  HyperAddNotAssociative,
  HyperAddNotCommutative,
  HyperAddEmpty,
  ZeroLaw,
  HyperActionNotDistributive,
  MulNotMonoid,
  NegationNotUnique,
  CarrierTooLarge,
  S0NotValid,
  NotNormal,
  NotAGroup,
  BadParameter,
  // congruences / spectrum / verify
  CapExceeded,
  LatticeRequired,
  HypothesisFails,
  NoDisjointCongruence,
  UnknownCheckId,
  // io
  SyntaxError,
  UnknownLabel,
  DimensionMismatch,
  DuplicateLabel,
  MissingField,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadTable: return "BadTable";
    case ErrorCode::NonCommutativeAdd: return "NonCommutativeAdd";
    case ErrorCode::NonAssociativeAdd: return "NonAssociativeAdd";
    case ErrorCode::ZeroNotNeutral: return "ZeroNotNeutral";
    case ErrorCode::ZeroNotAbsorbing: return "ZeroNotAbsorbing";
    case ErrorCode::OneNotUnit: return "OneNotUnit";
    case ErrorCode::TNotClosed: return "TNotClosed";
    case ErrorCode::TNotCentral: return "TNotCentral";
    case ErrorCode::A0NotSubmodule: return "A0NotSubmodule";
    case ErrorCode::NonUniqueE: return "NonUniqueE";
    case ErrorCode::NoPropertyN: return "NoPropertyN";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NotOrderTwo: return "NotOrderTwo";
    case ErrorCode::NotAdditive: return "NotAdditive";
    case ErrorCode::QuasiNegationFails: return "QuasiNegationFails";
    case ErrorCode::TNotPreserved: return "TNotPreserved";
    case ErrorCode::A0NotPreserved: return "A0NotPreserved";
    case ErrorCode::NotTCompatible: return "NotTCompatible";
    case ErrorCode::NuNotHomomorphism: return "NuNotHomomorphism";
    case ErrorCode::OrderNotTotal: return "OrderNotTotal";
    case ErrorCode::BadBound: return "BadBound";
    case ErrorCode::NotACongruence: return "NotACongruence";
    case ErrorCode::HyperAddNotAssociative: return "HyperAddNotAssociative";
    case ErrorCode::HyperAddNotCommutative: return "HyperAddNotCommutative";
    case ErrorCode::HyperAddEmpty: return "HyperAddEmpty";
    case ErrorCode::ZeroLaw: return "ZeroLaw";
    case ErrorCode::HyperActionNotDistributive: return "HyperActionNotDistributive";
    case ErrorCode::MulNotMonoid: return "MulNotMonoid";
    case ErrorCode::NegationNotUnique: return "NegationNotUnique";
    case ErrorCode::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorCode::S0NotValid: return "S0NotValid";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::LatticeRequired: return "LatticeRequired";
    case ErrorCode::HypothesisFails: return "HypothesisFails";
    case ErrorCode::NoDisjointCongruence: return "NoDisjointCongruence";
    case ErrorCode::UnknownCheckId: return "UnknownCheckId";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::MissingField: return "MissingField";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this exception. The
/// witness holds the element indices that exhibit the violation, in the
/// order named by the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<Elem> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<Elem>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<Elem> witness_;
};

/// Raised when an enumeration hits its configured cap; carries how far it got.
class CapExceededError : public Error {
 public:
  CapExceededError(std::string message, std::size_t partial_count)
      : Error(ErrorCode::CapExceeded, std::move(message)),
        partial_count_(partial_count) {}

  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t partial_count_;
};

}  // namespace pairspec
