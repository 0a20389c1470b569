#pragma once

#include <stdexcept>
#include <string>

namespace hc {

// Machine-readable reason codes for precondition and hypothesis failures.
enum class Err {
  IllFormedPresentation,
  IncompleteSystem,
  FamilyMismatch,
  UnknownGenerator,
  Undecided,
  InfiniteIndex,
  NotNormal,
  UnsupportedQuotient,
  NotTwoEnded,
  NotFree,
  NotGenerating,
  TooFewGenerators,
  HypothesisViolated,
  InnerInvalid,
  NotAMatching,
  BlockNotHamiltonian,
  CoreNotMet,
  NotMinimal,
  CoreNotZ2,
  CompletionFailed,
  BadParameters,
  QuotientNotHamiltonian,
  NotInfiniteOrder,
  ProductDoesNotGenerate,
  NotHamiltonInSchreier,
  SearchExhausted,
  BadRank,
  FiberMissing,
  LocalityViolated,
  UnsupportedTwistPattern,
  UnrollTooShort,
  CutsMissing,
  WindowTooSmall,
  HintUnsupported,
  MalformedCycle,
  BudgetExceeded,
  ParseError,
};

const char* to_string(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace hc
