#include "fundament/error.hpp"

namespace fundament {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::MalformedPermutation: return "MalformedPermutation";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorKind::NotCartesian: return "NotCartesian";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::TargetMismatch: return "TargetMismatch";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::Incompatible: return "Incompatible";
    case ErrorKind::EmptyFactorList: return "EmptyFactorList";
    case ErrorKind::NotInsideKernel: return "NotInsideKernel";
    case ErrorKind::NotCentralInKernel: return "NotCentralInKernel";
    case ErrorKind::NotElementaryAbelian: return "NotElementaryAbelian";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::CharacteristicMismatch: return "CharacteristicMismatch";
    case ErrorKind::NotAGenerated: return "NotAGenerated";
    case ErrorKind::NotSubmodule: return "NotSubmodule";
    case ErrorKind::NotCocycle: return "NotCocycle";
    case ErrorKind::KernelNotAbelian: return "KernelNotAbelian";
    case ErrorKind::NotIsomorphism: return "NotIsomorphism";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::NotFundamental: return "NotFundamental";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::NotFundamentalStage: return "NotFundamentalStage";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownReference: return "UnknownReference";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace fundament
