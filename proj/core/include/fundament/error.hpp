#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fundament {

enum class ErrorKind {
  OrderCapExceeded,
  MalformedPermutation,
  NotNormal,
  NotHomomorphism,
  NotSurjective,
  NotCommutative,
  SourceTargetMismatch,
  NotCartesian,
  Mismatch,
  TargetMismatch,
  BadIndex,
  Incompatible,
  EmptyFactorList,
  NotInsideKernel,
  NotCentralInKernel,
  NotElementaryAbelian,
  NotSimple,
  CharacteristicMismatch,
  NotAGenerated,
  NotSubmodule,
  NotCocycle,
  KernelNotAbelian,
  NotIsomorphism,
  SpaceMismatch,
  NotFundamental,
  BaseMismatch,
  NotFundamentalStage,
  InvalidArgument,
  ParseError,
  UnknownReference,
  UsageError,
};

std::string_view to_string(ErrorKind kind);

// Every failure the library reports on purpose is one of these; the kind lets
// callers (and tests) tell them apart without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace fundament
